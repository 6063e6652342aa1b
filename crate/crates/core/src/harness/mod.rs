pub mod checks;
pub mod distribution;
pub mod enumerate;
pub mod golden;
pub mod registry;

pub use checks::{run_suite, CheckId, CheckReport, SuiteOptions, SuiteReport};
pub use distribution::{compare_distributions, Distribution, Verdict};
pub use enumerate::{enumerate_sn, factorial, MAX_N};
pub use golden::{emit_table, load_golden_fixture, GoldenRow, GoldenTable};
pub use registry::{eval_tuple, StatValue, StatisticSpec};
