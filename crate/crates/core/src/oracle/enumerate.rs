//! Full enumeration of a group from generators, and exact element orders.

use std::collections::{BTreeMap, BTreeSet};

use rustc_hash::FxHashSet;

use crate::error::{Error, Result};

use super::genfile::Presentation;
use super::rep::Rep;
use super::{SpectrumMode, SpectrumReport};

/// All elements (as keys, sorted) of the group generated by `p`, or
/// `BoundExceeded` once more than `bound` elements appear.
pub fn enumerate_elements(p: &Presentation, bound: u64) -> Result<Vec<u128>> {
    if let Some(o) = &p.expected_order {
        if *o > bound.into() {
            return Err(Error::BoundExceeded { group: p.label.to_string(), bound });
        }
    }
    let rep = &p.rep;
    let id = rep.key(&rep.identity());
    let mut seen: FxHashSet<u128> = FxHashSet::default();
    seen.insert(id);
    let mut list = vec![id];
    let mut tmp = vec![0u8; rep.len()];
    let mut x = vec![0u8; rep.len()];
    let mut i = 0;
    while i < list.len() {
        rep.decode_into(list[i], &mut x);
        for g in &p.generators {
            rep.mul_into(&x, g, &mut tmp);
            let k = rep.key(&tmp);
            if seen.insert(k) {
                list.push(k);
                if list.len() as u64 > bound {
                    return Err(Error::BoundExceeded { group: p.label.to_string(), bound });
                }
            }
        }
        i += 1;
    }
    drop(seen);
    list.sort_unstable();
    Ok(list)
}

/// Order (modulo the centre) of every element of a sorted element list.
///
/// Each cyclic subgroup is walked once; its generators all receive the same order.
pub fn element_orders(rep: &Rep, elements: &[u128]) -> Result<Vec<u32>> {
    let id = rep.key(&rep.identity());
    let mut orders = vec![0u32; elements.len()];
    let mut tmp = vec![0u8; rep.len()];
    let mut powers: Vec<u128> = Vec::new();
    let index = |k: u128| -> Result<usize> {
        elements
            .binary_search(&k)
            .map_err(|_| Error::Generators("element list is not closed under powers".into()))
    };
    for i in 0..elements.len() {
        if orders[i] != 0 {
            continue;
        }
        let x = rep.decode(elements[i]);
        let mut cur = x.clone();
        powers.clear();
        loop {
            let k = rep.key(&cur);
            if k == id {
                break;
            }
            powers.push(k);
            if powers.len() > elements.len() {
                return Err(Error::Generators("element of unbounded order".into()));
            }
            rep.mul_into(&cur, &x, &mut tmp);
            std::mem::swap(&mut cur, &mut tmp);
        }
        let n = powers.len() as u64 + 1;
        if n == 1 {
            orders[i] = 1;
            continue;
        }
        for (j, &k) in powers.iter().enumerate() {
            if num_integer::gcd(j as u64 + 1, n) == 1 {
                orders[index(k)?] = n as u32;
            }
        }
    }
    Ok(orders)
}

/// Exact spectrum with per-order element counts.
pub fn enumerate_spectrum(p: &Presentation, bound: u64) -> Result<SpectrumReport> {
    let elements = enumerate_elements(p, bound)?;
    if let Some(o) = &p.expected_order {
        if *o != (elements.len() as u64).into() {
            return Err(Error::Generators(format!(
                "{} generators give a group of order {}, expected {o}",
                p.label,
                elements.len()
            )));
        }
    }
    let orders = element_orders(&p.rep, &elements)?;
    let mut counts: BTreeMap<u64, u64> = BTreeMap::new();
    for &o in &orders {
        *counts.entry(o as u64).or_default() += 1;
    }
    Ok(SpectrumReport {
        label: p.label.clone(),
        mode: SpectrumMode::ExactEnumeration,
        orders: counts.keys().copied().collect::<BTreeSet<u64>>(),
        group_size: Some(elements.len() as u64),
        order_counts: counts,
        sample: None,
    })
}
