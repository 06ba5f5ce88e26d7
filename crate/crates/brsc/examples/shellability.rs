//! Shelling orders for pure and non-pure complexes.

use brsc::{json, matroid};

fn main() -> brsc::Result<()> {
    let cases = [
        r#"{"vertices": 4, "facets": [[1,2,3],[2,3,4],[1,4]]}"#,
        r#"{"vertices": 4, "facets": [[1,2],[3,4]]}"#,
        r#"{"vertices": 6, "facets": [[1,2,3],[4,5,6]]}"#,
        r#"{"vertices": 5, "facets": [[1,2,3],[1,3,4],[1,4,5],[1,2,5]]}"#,
    ];
    for text in cases {
        let c = json::parse_complex(text)?;
        match matroid::is_shellable(&c) {
            Some(s) => {
                let steps: Vec<String> = s.order[1..]
                    .iter()
                    .zip(&s.certificates)
                    .map(|(&b, cert)| format!("{} [{}]", c.show(b), c.show_all(cert.iter().copied())))
                    .collect();
                println!("{text}\n  shelling: {}, {}", c.show(s.order[0]), steps.join(", "));
            }
            None => println!("{text}\n  not shellable"),
        }
    }
    Ok(())
}
