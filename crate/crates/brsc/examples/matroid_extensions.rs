//! Matroid extensions of the Desargues and non-Desargues complexes.

use brsc::catalog::{self, Params};
use brsc::matroid;

fn main() -> brsc::Result<()> {
    for name in ["desargues", "non-desargues", "triang", "sme"] {
        let c = catalog::named(name, &Params::new())?;
        let (j, verdict) = matroid::matroid_extension_candidate(&c)?;
        println!("{name}: J(T(H)) has dimension {} -> {}", j.dim(), verdict.as_str());
        let t = std::time::Instant::now();
        let r = matroid::search_matroid_extensions(&c, 100_000_000)?;
        println!(
            "  search: {} variables, {} nodes, {} extensions, complete = {} ({:.2?})",
            r.variables,
            r.nodes,
            r.extensions.len(),
            r.complete,
            t.elapsed()
        );
    }
    Ok(())
}
