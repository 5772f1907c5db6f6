//! Configuration, sweeps, diversity fits, artifact emission and the
//! cross-validation report.

mod config;
mod diversity;
mod emit;
mod sweep;
mod validate;

pub use config::{
    load_config, parse_config, regime_name, Config, EmitFlags, SweepSpec, ValidationSpec, DEFAULT_SEED,
    DEFAULT_SWEEP_TRIALS, DEFAULT_VALIDATION_TRIALS,
};
pub use diversity::{fit_diversity, least_squares_slope};
pub use emit::{
    csv_string, emit_csv, emit_svg, emit_table, methods, parse_csv, read_csv, svg_string, table_string, Method,
    CSV_HEADER,
};
pub use sweep::{run_analytic_sweep, run_metadata, run_sweep, CurveRow, OutageCurve};
pub use validate::{validate, Check, ValidationReport};
