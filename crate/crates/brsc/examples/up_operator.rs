//! Iterating the up operator until it stabilises.

use brsc::{catalog, operators};

fn main() -> brsc::Result<()> {
    let mut c = catalog::named("uniform", &catalog::Params::new().with("k", 1).with("n", 5))?;
    c = c.union(&brsc::Complex::new(5, [0b00011, 0b01100])?)?;
    for step in 0.. {
        println!("step {step}: dim {} with {} facets: {}", c.dim(), c.facets().len(), c.show_all(c.facets().iter().copied()));
        let next = operators::up(&c);
        if next == c {
            break;
        }
        c = next;
    }
    let g = operators::is_graphic_boolean(&c);
    println!("graphic boolean: {} ({} edges)", g.graphic, g.edges.len());
    Ok(())
}
