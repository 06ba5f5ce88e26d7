//! Canonical forms and isomorphisms between relabelled complexes.

use brsc::{catalog, iso, json, random};

fn main() -> brsc::Result<()> {
    let c = catalog::named("desargues", &catalog::Params::new())?;
    let mut g = random::rng(5);
    let perm = random::permutation(&mut g, c.n());
    let d = c.permuted(&perm);
    let phi = iso::are_isomorphic(&c, &d).expect("relabelled copies are isomorphic");
    println!("relabelling {perm:?} recovered as {phi:?}");
    let n = catalog::named("non-desargues", &catalog::Params::new())?;
    println!("desargues ~ non-desargues: {}", iso::are_isomorphic(&c, &n).is_some());
    let small = json::parse_complex(r#"{"vertices": 4, "facets": [[3,4],[1,2,4]]}"#)?;
    let f = iso::canonical_form(&small);
    println!("canonical facets of {}: {:?}", json::complex_to_string(&small), f.facets);
    Ok(())
}
