//! Instance catalog, scenario files, suite execution and reports.

pub mod instances;
pub mod report;
pub mod scenario;
pub mod suite;

pub use instances::{all_actions, default_suite, ActionInstance};
pub use report::Format;
pub use scenario::{load_scenario, parse_scenario, Scenario, ScenarioError};
pub use suite::{exit_code, run_suite, Check, CheckKind, Expect, Record};
