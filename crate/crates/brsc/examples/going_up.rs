//! The T operator, codimension and minimality of paving complexes.

use brsc::catalog::{self, Params};
use brsc::t_operator;

fn main() -> brsc::Result<()> {
    for name in ["desargues", "six", "nfb", "swirl"] {
        let c = catalog::named(name, &Params::new())?;
        let r = t_operator::goes_up(&c);
        let minimality = match t_operator::classify_minimality(&c) {
            Ok(m) => m.as_str(),
            Err(_) => "not paving",
        };
        println!(
            "{name:>10}: dim {}, |T(H)| = {}, dim J(T(H)) = {}, codimension {}, goes up: {}, {minimality}",
            c.dim(),
            r.t_family_size,
            r.dim_jt,
            r.codimension,
            r.goes_up
        );
    }
    let classes = t_operator::enumerate_mngu(6, 2)?;
    println!("maximal complexes not going up on 6 points: {} classes", classes.len());
    let m = t_operator::enumerate_mgu(7)?;
    let pairs: Vec<String> = m.members.iter().map(|((i, j), _)| format!("({i},{j})")).collect();
    println!("minimal going-up classes on 7 points: {}", pairs.join(" "));
    Ok(())
}
