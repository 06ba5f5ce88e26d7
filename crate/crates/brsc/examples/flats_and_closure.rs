//! Flats, closures and boolean representability of a small complex.

use brsc::{json, lattice, Complex};

fn main() -> brsc::Result<()> {
    let skeleton = Complex::uniform(1, 6)?;
    let lines = skeleton.parse_faces("123 145 246 356")?;
    let c = Complex::paving_from_defect(6, 2, &lines)?;
    let fl = lattice::flats(&c);
    println!("{} facets, {} flats: {}", c.facets().len(), fl.len(), c.show_all(fl.iter()));
    for s in ["1", "12", "16", "124"] {
        let x = c.parse_face(s)?;
        println!("Cl({}) = {}", c.show(x), c.show(lattice::closure(&c, x)));
    }
    match lattice::is_boolean_representable(&c).witness {
        None => println!("boolean representable"),
        Some(b) => println!("not boolean representable: facet {} has no transversal ordering", c.show(b)),
    }
    let m = lattice::matrix_of(&fl);
    println!("matrix of the flats:");
    for row in m.to_grid() {
        println!("  {row}");
    }
    let j = lattice::complex_of_matrix(&m)?;
    println!("J(Fl H) == H: {}", j == c);
    println!("{}", json::complex_to_string(&c));

    let bad = json::parse_complex(r#"{"vertices": 5, "facets": [[1,2,4],[1,3,4],[2,3,4],[1,2,5],[3,5],[4,5]]}"#)?;
    if let Some(b) = lattice::is_boolean_representable(&bad).witness {
        println!("second complex: facet {} has no transversal ordering", bad.show(b));
    }
    Ok(())
}
