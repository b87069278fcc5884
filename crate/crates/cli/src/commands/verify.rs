use tdde_core::solver::oracle_deviation;
use tdde_core::{DdeParams, RegimeKind, SolverError};

use crate::error::CliError;
use crate::format::fmt_g;
use crate::VerifyArgs;

/// Largest relative deviation accepted as agreement.
pub const TOLERANCE: f64 = 1e-6;

pub fn run(args: &VerifyArgs) -> Result<(), CliError> {
    if args.t_max <= 0.0 {
        return Err(CliError::usage("--t-max must be positive"));
    }
    if !(args.step > 0.0 && args.step <= args.t_max) {
        return Err(CliError::usage("--step must lie in (0, t-max]"));
    }
    let params = DdeParams::new(args.a, args.b, args.p0, args.t_max)?;
    let regime = params.regime();
    if regime.kind != RegimeKind::Exponential {
        return Err(SolverError::WrongRegime {
            operation: "verify",
            expected: RegimeKind::Exponential,
            actual: regime.kind,
        }
        .into());
    }
    let deviation = oracle_deviation(&params, args.t_max, args.step)?;
    println!("{}", fmt_g(deviation));
    if deviation > TOLERANCE {
        return Err(CliError::new(
            6,
            "VerifyFailed",
            format!("max relative deviation {} exceeds {}", fmt_g(deviation), fmt_g(TOLERANCE)),
        ));
    }
    Ok(())
}
