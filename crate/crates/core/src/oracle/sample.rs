//! Product-replacement sampling. Observed orders are genuine element orders; every
//! observation is replayable from `(seed, step)`.

use std::collections::{BTreeMap, BTreeSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::genfile::Presentation;
use super::{SpectrumMode, SpectrumReport};

const WARMUP: u64 = 100;
const ORDER_CAP: u64 = 100_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SampleInfo {
    pub budget: u64,
    pub seed: u64,
    /// First step at which each order was observed.
    pub witnesses: BTreeMap<u64, u64>,
}

struct Walk<'a> {
    p: &'a Presentation,
    rng: ChaCha8Rng,
    slots: Vec<Vec<u8>>,
    acc: Vec<u8>,
    tmp: Vec<u8>,
}

impl<'a> Walk<'a> {
    fn new(p: &'a Presentation, seed: u64) -> Result<Walk<'a>> {
        if p.generators.is_empty() {
            return Err(Error::Generators(format!("{} has no generators", p.label)));
        }
        let n = p.generators.len().max(10);
        let slots = (0..n).map(|i| p.generators[i % p.generators.len()].clone()).collect();
        let mut w = Walk {
            p,
            rng: ChaCha8Rng::seed_from_u64(seed),
            slots,
            acc: p.rep.identity(),
            tmp: vec![0u8; p.rep.len()],
        };
        for _ in 0..WARMUP {
            w.step();
        }
        Ok(w)
    }

    fn step(&mut self) {
        let n = self.slots.len();
        let i = self.rng.gen_range(0..n);
        let mut j = self.rng.gen_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        let rep = &self.p.rep;
        if self.rng.gen::<bool>() {
            rep.mul_into(&self.slots[i], &self.slots[j], &mut self.tmp);
        } else {
            rep.mul_into(&self.slots[j], &self.slots[i], &mut self.tmp);
        }
        std::mem::swap(&mut self.slots[i], &mut self.tmp);
        rep.mul_into(&self.acc, &self.slots[i], &mut self.tmp);
        std::mem::swap(&mut self.acc, &mut self.tmp);
    }
}

/// Orders of `budget` random elements. `budget = 0` reports only the identity.
pub fn sample_spectrum(p: &Presentation, budget: u64, seed: u64) -> Result<SpectrumReport> {
    let mut witnesses: BTreeMap<u64, u64> = BTreeMap::new();
    witnesses.insert(1, 0);
    if budget > 0 {
        let mut walk = Walk::new(p, seed)?;
        for step in 1..=budget {
            walk.step();
            if let Some(o) = p.rep.element_order(&walk.acc, ORDER_CAP) {
                witnesses.entry(o).or_insert(step);
            }
        }
    }
    let mut orders = BTreeSet::new();
    for &o in witnesses.keys() {
        for d in 1..=o {
            if o % d == 0 {
                orders.insert(d);
            }
        }
    }
    Ok(SpectrumReport {
        label: p.label.clone(),
        mode: SpectrumMode::Sampled,
        orders,
        group_size: None,
        order_counts: BTreeMap::new(),
        sample: Some(SampleInfo { budget, seed, witnesses }),
    })
}

/// Order of the element produced at `step` of the walk with `seed`.
pub fn replay_sample(p: &Presentation, seed: u64, step: u64) -> Result<u64> {
    if step == 0 {
        return Ok(1);
    }
    let mut walk = Walk::new(p, seed)?;
    for _ in 0..step {
        walk.step();
    }
    p.rep
        .element_order(&walk.acc, ORDER_CAP)
        .ok_or_else(|| Error::Generators("replayed element exceeds the order cap".into()))
}
