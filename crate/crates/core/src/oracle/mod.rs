//! Ground truth from concrete groups: exact spectra by enumeration or cycle types,
//! and one-sided spectra by random sampling.

pub mod construct;
pub mod cycletype;
pub mod enumerate;
pub mod field;
pub mod genfile;
pub mod rep;
pub mod sample;

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::engine::PrimeGraph;
use crate::error::Result;
use crate::evidence::{Certificate, Decision};
pub use crate::evidence::SpectrumMode;
use crate::group::GroupId;
use crate::orders;

pub use cycletype::cycle_type_spectrum;
pub use enumerate::enumerate_spectrum;
pub use genfile::Presentation;
pub use sample::{replay_sample, sample_spectrum, SampleInfo};

pub const DEFAULT_ENUMERATION_BOUND: u64 = 5_000_000;
pub const DEFAULT_SAMPLING_BUDGET: u64 = 100_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumReport {
    pub label: GroupId,
    pub mode: SpectrumMode,
    pub orders: BTreeSet<u64>,
    /// Number of elements enumerated (exact enumeration only).
    pub group_size: Option<u64>,
    /// Elements of each order (exact enumeration only).
    pub order_counts: BTreeMap<u64, u64>,
    pub sample: Option<SampleInfo>,
}

impl SpectrumReport {
    pub fn is_exact(&self) -> bool {
        self.mode != SpectrumMode::Sampled
    }

    /// Least observed order divisible by `m`.
    pub fn witness(&self, m: u64) -> Option<u64> {
        match &self.sample {
            Some(info) => info.witnesses.keys().copied().find(|o| o % m == 0),
            None => self.orders.iter().copied().find(|o| o % m == 0),
        }
    }
}

const DATA: [(&str, &str); 20] = [
    ("sp4_2.gens", include_str!("../../data/sp4_2.gens")),
    ("sp4_4.gens", include_str!("../../data/sp4_4.gens")),
    ("sp6_2.gens", include_str!("../../data/sp6_2.gens")),
    ("psp4_3.gens", include_str!("../../data/psp4_3.gens")),
    ("l2_4.gens", include_str!("../../data/l2_4.gens")),
    ("l2_5.gens", include_str!("../../data/l2_5.gens")),
    ("l2_7.gens", include_str!("../../data/l2_7.gens")),
    ("l2_11.gens", include_str!("../../data/l2_11.gens")),
    ("l2_13.gens", include_str!("../../data/l2_13.gens")),
    ("l2_25.gens", include_str!("../../data/l2_25.gens")),
    ("pomega6m_3.gens", include_str!("../../data/pomega6m_3.gens")),
    ("g2_3.gens", include_str!("../../data/g2_3.gens")),
    ("omega8p_2.gens", include_str!("../../data/omega8p_2.gens")),
    ("omega8p_2_p1.gens", include_str!("../../data/omega8p_2_p1.gens")),
    ("omega8p_2_p3.gens", include_str!("../../data/omega8p_2_p3.gens")),
    ("omega8p_2_p4.gens", include_str!("../../data/omega8p_2_p4.gens")),
    ("l6_2_p1.gens", include_str!("../../data/l6_2_p1.gens")),
    ("l6_2_p5.gens", include_str!("../../data/l6_2_p5.gens")),
    ("u4_2_p2.gens", include_str!("../../data/u4_2_p2.gens")),
    ("m11.gens", include_str!("../../data/m11.gens")),
];

/// Raw text of every shipped generator file.
pub fn data_files() -> &'static [(&'static str, &'static str)] {
    &DATA
}

/// Shipped presentation whose label is `g` (compared exactly, then canonically),
/// or a permutation presentation of a small alternating group.
pub fn presentation_for(g: &GroupId) -> Result<Option<Presentation>> {
    let g = g.clone().normalized();
    for (_, text) in DATA {
        let p = Presentation::parse(text)?;
        if p.label.clone().normalized() == g {
            return Ok(Some(p));
        }
    }
    let canon = g.canonical();
    for (_, text) in DATA {
        let p = Presentation::parse(text)?;
        if p.label.canonical() == canon {
            return Ok(Some(p));
        }
    }
    if let crate::group::Family::Alternating { n } = canon.family {
        if (3..=10).contains(&n) {
            return construct::alternating(n as usize).map(Some);
        }
    }
    Ok(None)
}

/// Prime graph read off a spectrum; sampled spectra leave unobserved pairs `Unknown`.
pub fn graph_from_spectrum(rep: &SpectrumReport) -> Result<PrimeGraph> {
    let vertices: Vec<u64> = orders::pi(&rep.label)?.into_iter().collect();
    let mut g = PrimeGraph::new(rep.label.clone(), vertices);
    let pairs: Vec<(u64, u64)> = g.pairs().collect();
    let (seed, budget) = rep.sample.as_ref().map(|s| (Some(s.seed), Some(s.budget))).unwrap_or((None, None));
    for (r, s) in pairs {
        let witness = rep.witness(r * s);
        let step = match (&rep.sample, witness) {
            (Some(info), Some(o)) => info.witnesses.get(&o).copied(),
            _ => None,
        };
        let cert = Certificate::Spectrum { group: rep.label.clone(), r, s, mode: rep.mode, witness_order: witness, seed, step };
        let d = match (witness, rep.is_exact()) {
            (Some(_), _) => Decision::Present(cert),
            (None, true) => Decision::Absent(cert),
            (None, false) => Decision::Unknown(format!(
                "no element of order divisible by {} among {} samples",
                r * s,
                budget.unwrap_or(0)
            )),
        };
        g.set(r, s, d);
    }
    Ok(g)
}
