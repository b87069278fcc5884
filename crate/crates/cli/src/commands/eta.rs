use tdde_core::{eta_article, DdeParams};

use crate::error::CliError;
use crate::format::fmt_g;
use crate::EtaArgs;

pub fn run(args: &EtaArgs) -> Result<(), CliError> {
    // p0 and the domain do not enter the formula
    let params = DdeParams::new(args.a, args.b, 1.0, 1.0)?;
    let eta = eta_article(args.art, args.alpha, &params)?;
    println!("{}", fmt_g(eta));
    Ok(())
}
