//! Element orders of `A_n`, `S_n` and `(S_k × S_{n-k}) ∩ A_n` from cycle types.

use std::collections::{BTreeMap, BTreeSet};

use rustc_hash::FxHashSet;

use crate::error::{Error, Result};
use crate::group::{Family, GroupId};

use super::{SpectrumMode, SpectrumReport};

pub const MAX_DEGREE: u32 = 60;

/// `(order, odd)` for every permutation of `n` points, as a set.
pub fn order_parity_set(n: u32) -> BTreeSet<(u64, bool)> {
    let n = n as usize;
    // reach[s]: (lcm, odd) over multisets of cycle lengths ≥ 2 summing to exactly s
    let mut reach: Vec<FxHashSet<(u64, bool)>> = vec![FxHashSet::default(); n + 1];
    reach[0].insert((1, false));
    for d in 2..=n {
        for s in 0..=n - d {
            if reach[s].is_empty() {
                continue;
            }
            let next: Vec<(u64, bool)> = reach[s]
                .iter()
                .map(|&(l, odd)| (num_integer::lcm(l, d as u64), odd ^ (d % 2 == 0)))
                .collect();
            reach[s + d].extend(next);
        }
    }
    reach.into_iter().flatten().collect()
}

/// Exact spectrum of a permutation-type group.
pub fn cycle_type_spectrum(g: &GroupId) -> Result<SpectrumReport> {
    let check = |n: u32| {
        if n > MAX_DEGREE {
            Err(Error::Range(format!("degree {n} exceeds {MAX_DEGREE}")))
        } else {
            Ok(())
        }
    };
    let orders: BTreeSet<u64> = match &g.family {
        Family::Alternating { n } => {
            check(*n)?;
            order_parity_set(*n).into_iter().filter(|&(_, odd)| !odd).map(|(o, _)| o).collect()
        }
        Family::Symmetric { n } => {
            check(*n)?;
            order_parity_set(*n).into_iter().map(|(o, _)| o).collect()
        }
        Family::DirectFactorIntersection { k, n } => {
            check(*n)?;
            let left = order_parity_set(*k);
            let right = order_parity_set(n - k);
            let mut out = BTreeSet::new();
            for &(a, pa) in &left {
                for &(b, pb) in &right {
                    if pa == pb {
                        out.insert(num_integer::lcm(a, b));
                    }
                }
            }
            out
        }
        _ => return Err(Error::Unsupported(format!("{g} is not a permutation-type group"))),
    };
    Ok(SpectrumReport {
        label: g.clone(),
        mode: SpectrumMode::CycleTypeExact,
        orders,
        group_size: None,
        order_counts: BTreeMap::new(),
        sample: None,
    })
}
