mod compare;
mod compute;
mod graph;
mod tables;

pub use compare::{compare, compare_graphs, inherit_absences, ComparisonVerdict, Verdict, Witness};
pub use compute::{compute_graph, decide_by_formula, oracle_spectrum, Policy};
pub use graph::{Edge, PrimeGraph};
pub use tables::{
    chain_case, main_table_rows, pi_table_rows, replay_witness, verify_corollary, verify_main_row, verify_main_table,
    verify_pi_table, ChainCase, CorollaryReport, MainRow, MainRowReport, PiRow, PiRowReport, Proposition, WitnessPath,
    WitnessReplay,
};
