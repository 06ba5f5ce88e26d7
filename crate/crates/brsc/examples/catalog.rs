//! Every named complex with its basic invariants.

use brsc::catalog::{self, Params};
use brsc::{lattice, matroid, t_operator};

fn main() -> brsc::Result<()> {
    println!("{:<14} {:>3} {:>3} {:>7} {:>3} {:>5} {:>7}", "name", "n", "dim", "facets", "BR", "TBRSC", "matroid");
    for e in catalog::registry() {
        let c = e.build(&Params::new())?;
        println!(
            "{:<14} {:>3} {:>3} {:>7} {:>3} {:>5} {:>7}",
            e.name,
            c.n(),
            c.dim(),
            c.facets().len(),
            lattice::is_boolean_representable(&c).representable as u8,
            t_operator::is_tbrsc(&c) as u8,
            matroid::is_matroid(&c).matroid as u8
        );
    }
    Ok(())
}
