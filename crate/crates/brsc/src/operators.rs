//! Operators building new complexes: `up`, point extensions, `B_d(V,L)`,
//! graphic boolean recognition and induced-subgraph complexes.

use petgraph::unionfind::UnionFind;
use rustc_hash::FxHashSet;

use crate::bits::{self, Face};
use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::lattice;

/// `H^up = H ∪ {I ∪ {p} : I ∈ H, p ∈ V}`.
pub fn up(c: &Complex) -> Complex {
    let all = c.vertices();
    let mut gens = Vec::with_capacity(c.facets().len() * c.n());
    for &b in c.facets() {
        if b == all {
            gens.push(b);
        }
        for p in bits::indices(all & !b) {
            gens.push(b | bits::bit(p));
        }
    }
    with_labels_of(c, Complex::new(c.n(), gens).expect("faces stay inside V"))
}

/// `H^up` through its complement description: `X` is a face iff `X = ∅` or
/// `X \ {x} ∈ H` for some `x ∈ X`.
pub fn up_by_complement(c: &Complex) -> Complex {
    let mut faces: FxHashSet<Face> = FxHashSet::default();
    faces.insert(0);
    for x in c.faces() {
        faces.insert(x);
        for p in bits::indices(c.vertices() & !x) {
            let y = x | bits::bit(p);
            if bits::indices(y).any(|q| c.is_face(y & !bits::bit(q))) {
                faces.insert(y);
            }
        }
    }
    with_labels_of(c, Complex::from_down_closed(c.n(), &faces).expect("valid vertex count"))
}

/// `m`-fold `up`. Paving inputs go through [`up_iter_paving`].
pub fn up_iter(c: &Complex, m: usize) -> Complex {
    if c.is_paving().is_some() {
        let fast = up_iter_paving(c, m).expect("input is paving");
        debug_assert_eq!(fast, up_iter_generic(c, m));
        return fast;
    }
    up_iter_generic(c, m)
}

fn up_iter_generic(c: &Complex, m: usize) -> Complex {
    let mut h = c.clone();
    for _ in 0..m {
        if h.is_face(h.vertices()) {
            break;
        }
        h = up(&h);
    }
    h
}

/// Closed form of `m`-fold `up` on `Pav(d)`: everything up to size `d+m`,
/// plus the `(d+m+1)`-sets containing some `(d+1)`-face of `H`.
pub fn up_iter_paving(c: &Complex, m: usize) -> Result<Complex> {
    let d = c
        .is_paving()
        .ok_or_else(|| Error::domain("closed form needs a paving complex"))?;
    let n = c.n();
    if d + m >= n {
        return Ok(with_labels_of(c, Complex::new(n, [c.vertices()])?));
    }
    let tops = c.faces_of_size(d + 1);
    let mut gens = bits::p_k(n, d + m);
    gens.extend(
        bits::p_k(n, d + m + 1)
            .into_iter()
            .filter(|&x| tops.iter().any(|&t| bits::is_subset(t, x))),
    );
    Ok(with_labels_of(c, Complex::new(n, gens)?))
}

fn with_labels_of(c: &Complex, out: Complex) -> Complex {
    out.with_labels(c.labels().to_vec()).expect("same vertex count")
}

fn fresh_point(c: &Complex, label: &str) -> Result<Vec<String>> {
    if c.labels().iter().any(|l| l == label) {
        return Err(Error::domain(format!("vertex {label:?} is already in V")));
    }
    if c.n() >= crate::complex::MAX_VERTICES {
        return Err(Error::capacity("no room for another vertex"));
    }
    let mut labels = c.labels().to_vec();
    labels.push(label.to_string());
    Ok(labels)
}

/// `H + p`: a new isolated vertex.
pub fn plus_point(c: &Complex, label: &str) -> Result<Complex> {
    let labels = fresh_point(c, label)?;
    Complex::new(c.n() + 1, c.facets().to_vec())?.with_labels(labels)
}

/// `H ⊕ p`: faces `I` and `I ∪ {p}` for `I ∈ H`.
pub fn oplus_point(c: &Complex, label: &str) -> Result<Complex> {
    let labels = fresh_point(c, label)?;
    let p = bits::bit(c.n());
    Complex::new(c.n() + 1, c.facets().iter().map(|&b| b | p).collect::<Vec<_>>())?
        .with_labels(labels)
}

/// `H ⊞ p = J(Fl H ⊞ p)` for a boolean representable `H`.
pub fn boxplus_point(c: &Complex, label: &str) -> Result<Complex> {
    let labels = fresh_point(c, label)?;
    if !lattice::is_boolean_representable(c).representable {
        return Err(Error::domain("⊞p is defined for boolean representable complexes"));
    }
    let r = lattice::flats(c).boxplus()?;
    let out = lattice::transversal_complex(&r)?.with_labels(labels)?;
    debug_assert_eq!(out, boxplus_by_formula(c, label)?);
    Ok(out)
}

/// Faces `H ∪ {I ∪ {p} : I ∈ H, Cl(I) ≠ V} ∪ {vp : v ∈ V}`.
pub fn boxplus_by_formula(c: &Complex, label: &str) -> Result<Complex> {
    let labels = fresh_point(c, label)?;
    let all = c.vertices();
    let p = bits::bit(c.n());
    let mut gens: Vec<Face> = c.facets().to_vec();
    for x in c.faces() {
        if lattice::closure(c, x) != all {
            gens.push(x | p);
        }
    }
    gens.extend((0..c.n()).map(|v| bits::bit(v) | p));
    Complex::new(c.n() + 1, gens)?.with_labels(labels)
}

/// `B_d(V,L) = P_{<=d}(V) ∪ {X ∈ P_{d+1}(V) : |X ∩ L| = d}`.
pub fn b_d(n: usize, l: Face, d: usize) -> Result<Complex> {
    let k = bits::card(l);
    if d < 2 || d > k || k >= n || l & !bits::full(n) != 0 {
        return Err(Error::domain(format!(
            "B_d(V,L) needs 2 <= d <= |L| < |V|, got d = {d}, |L| = {k}, |V| = {n}"
        )));
    }
    let mut gens = bits::p_k(n, d);
    gens.extend(
        bits::p_k(n, d + 1)
            .into_iter()
            .filter(|&x| bits::card(x & l) == d),
    );
    Complex::new(n, gens)
}

/// Outcome of graphic boolean recognition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphicVerdict {
    pub graphic: bool,
    /// The largest edge set `E` with `(V, P_{<=1} ∪ E)^up ⊆ H`.
    pub edges: Vec<Face>,
}

/// Decides whether `H = Γ^up` for some graph `Γ`.
///
/// Every graph with `Γ^up = H` has its edges in `E_max`, and `up` is
/// monotone, so `E_max` itself is the only graph to test.
pub fn is_graphic_boolean(c: &Complex) -> GraphicVerdict {
    let all = c.vertices();
    let edges: Vec<Face> = bits::p_k(c.n(), 2)
        .into_iter()
        .filter(|&e| {
            c.is_face(e) && bits::indices(all & !e).all(|p| c.is_face(e | bits::bit(p)))
        })
        .collect();
    let gamma = Complex::new(c.n(), edges.clone()).expect("edges fit in V");
    GraphicVerdict { graphic: up(&gamma) == *c, edges }
}

/// Graph classes closed under deleting edges.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphClass {
    Edgeless,
    Forests,
    TriangleFree,
    /// No cycle of length at most `ℓ`.
    NoCycleUpTo(usize),
}

impl GraphClass {
    /// Whether the graph on `0..n` with the given edges belongs to the class.
    pub fn admits(self, n: usize, edges: &[(usize, usize)]) -> bool {
        match self {
            GraphClass::Edgeless => edges.is_empty(),
            GraphClass::Forests => is_forest(n, edges),
            GraphClass::TriangleFree => girth(n, edges).is_none_or(|g| g > 3),
            GraphClass::NoCycleUpTo(l) => girth(n, edges).is_none_or(|g| g > l),
        }
    }
}

fn is_forest(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut uf = UnionFind::<usize>::new(n);
    edges.iter().all(|&(a, b)| uf.union(a, b))
}

/// Length of a shortest cycle of a simple graph.
pub fn girth(n: usize, edges: &[(usize, usize)]) -> Option<usize> {
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut best: Option<usize> = None;
    for root in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[root] = 0;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    let len = dist[u] + dist[w] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

/// `H_G`: the vertex sets of `Γ` whose induced subgraph lies in `class`.
pub fn anticlique_complex(n: usize, edges: &[(usize, usize)], class: GraphClass) -> Result<Complex> {
    if n > 24 {
        return Err(Error::capacity("induced-subgraph scan is limited to 24 vertices"));
    }
    if edges.iter().any(|&(a, b)| a == b || a >= n || b >= n) {
        return Err(Error::domain("edges must join two distinct vertices of the graph"));
    }
    let mut faces = FxHashSet::default();
    for w in 0..(1u64 << n) {
        let idx: Vec<usize> = bits::indices(w).collect();
        let pos = |v: usize| idx.iter().position(|&x| x == v);
        let induced: Vec<(usize, usize)> = edges
            .iter()
            .filter_map(|&(a, b)| Some((pos(a)?, pos(b)?)))
            .collect();
        if class.admits(idx.len(), &induced) {
            faces.insert(w);
        }
    }
    Complex::from_down_closed(n, &faces)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bits::from_one_based as s;

    #[test]
    fn up_of_two_disjoint_edges_is_the_full_triangle_complex() {
        let c = Complex::new(4, [s(&[1, 2]), s(&[3, 4])]).unwrap();
        let u = up(&c);
        assert_eq!(u, Complex::uniform(3, 4).unwrap());
        let fl = lattice::flats(&u);
        let mut want = bits::p_k(4, 0);
        for k in 1..=2 {
            want.extend(bits::p_k(4, k));
        }
        want.push(0b1111);
        want.sort_unstable();
        assert_eq!(fl.members(), &want[..]);
    }

    #[test]
    fn up_on_uniform_and_full_simplex() {
        let u24 = Complex::uniform(2, 4).unwrap();
        assert_eq!(up(&u24), Complex::uniform(3, 4).unwrap());
        let full = Complex::uniform(4, 4).unwrap();
        assert_eq!(up(&full), full);
        assert_eq!(up_iter(&u24, 5), full);
    }

    #[test]
    fn oplus_adds_a_cone_point() {
        let c = Complex::new(3, [s(&[1, 2])]).unwrap();
        let o = oplus_point(&c, "p").unwrap();
        assert_eq!(o.dim(), c.dim() + 1);
        assert_eq!(o.labels().last().unwrap(), "p");
        assert!(oplus_point(&c, "1").is_err());
        let fl = lattice::flats(&o);
        let base = lattice::flats(&c);
        let p = bits::bit(3);
        let want: FxHashSet<Face> = base.iter().flat_map(|f| [f, f | p]).collect();
        assert_eq!(fl.members().len(), want.len());
        assert!(fl.iter().all(|f| want.contains(&f)));
    }

    #[test]
    fn boxplus_separates_families_with_equal_transversal_complexes() {
        let r = lattice::MooreFamily::new(4, [0, s(&[1]), s(&[2]), s(&[1, 2, 3]), 0b1111]).unwrap();
        let r2 = lattice::MooreFamily::new(4, [0, s(&[4]), s(&[1, 4]), s(&[2, 4]), 0b1111]).unwrap();
        let j = lattice::transversal_complex(&r).unwrap();
        assert_eq!(j, lattice::transversal_complex(&r2).unwrap());
        let x = s(&[1, 2, 5]);
        assert!(lattice::transversal_complex(&r.boxplus().unwrap()).unwrap().is_face(x));
        assert!(!lattice::transversal_complex(&r2.boxplus().unwrap()).unwrap().is_face(x));
    }

    #[test]
    fn boxplus_formula_matches_chain_transversals() {
        for c in [
            Complex::uniform(2, 4).unwrap(),
            Complex::paving_from_defect(4, 2, &[s(&[1, 2, 3])]).unwrap(),
            lattice::transversal_complex(
                &lattice::MooreFamily::new(4, [0, s(&[1]), s(&[1, 2]), 0b1111]).unwrap(),
            )
            .unwrap(),
        ] {
            assert_eq!(boxplus_point(&c, "p").unwrap(), boxplus_by_formula(&c, "p").unwrap());
        }
        let far = Complex::new(4, [s(&[1, 2, 3]), s(&[1, 4]), s(&[2, 4]), s(&[3, 4])]).unwrap();
        let far = far.union(&Complex::uniform(2, 4).unwrap()).unwrap();
        assert!(matches!(boxplus_point(&far, "p"), Err(Error::Domain(_))));
    }

    #[test]
    fn b_d_flats() {
        let b = b_d(6, s(&[1, 2, 3, 4]), 2).unwrap();
        let fl = lattice::flats(&b);
        let mut want: Vec<Face> = vec![0];
        want.extend(bits::p_k(6, 1));
        want.extend([s(&[1, 2, 3, 4]), 0b111111]);
        want.sort_unstable();
        assert_eq!(fl.members(), &want[..]);
        let b = b_d(5, s(&[1, 2, 3, 4]), 2).unwrap();
        let fl = lattice::flats(&b);
        let extra: Vec<Face> = bits::p_k(5, 2).into_iter().filter(|&x| x & s(&[5]) != 0).collect();
        assert!(extra.iter().all(|&x| fl.contains(x)));
        assert_eq!(fl.len(), 1 + 5 + extra.len() + 2);
        assert!(b_d(4, s(&[1, 2, 3, 4]), 2).is_err());
        assert!(b_d(5, s(&[1]), 2).is_err());
    }

    #[test]
    fn b_d_of_a_cohyperplane_is_a_union_of_small_ones() {
        let n = 6;
        for d in 2..=3 {
            let a = 0;
            let whole = b_d(n, bits::full(n) & !bits::bit(a), d).unwrap();
            let mut acc: Option<Complex> = None;
            for l in bits::p_k(n, d).into_iter().filter(|&l| l & bits::bit(a) != 0) {
                let b = b_d(n, l, d).unwrap();
                acc = Some(match acc {
                    None => b,
                    Some(x) => x.union(&b).unwrap(),
                });
            }
            assert_eq!(acc.unwrap(), whole);
        }
    }

    #[test]
    fn graphic_boolean_recognition() {
        let path = Complex::new(4, [s(&[1, 2]), s(&[2, 3])]).unwrap();
        let v = is_graphic_boolean(&up(&path));
        assert!(v.graphic);
        let again = Complex::new(4, v.edges.clone()).unwrap();
        assert_eq!(up(&again), up(&path));
        assert!(is_graphic_boolean(&Complex::uniform(3, 4).unwrap()).graphic);
        let far = Complex::paving_from_defect(4, 2, &[s(&[1, 2, 4]), s(&[1, 3, 4]), s(&[2, 3, 4])])
            .unwrap();
        assert!(!is_graphic_boolean(&far).graphic);
    }

    #[test]
    fn induced_subgraph_complexes() {
        let tri = [(0, 1), (1, 2), (0, 2)];
        let c = anticlique_complex(3, &tri, GraphClass::Edgeless).unwrap();
        assert_eq!(c, Complex::uniform(1, 3).unwrap());
        let c = anticlique_complex(3, &[(0, 1)], GraphClass::Edgeless).unwrap();
        assert_eq!(c.facets(), &[s(&[1, 3]), s(&[2, 3])]);
        let k4: Vec<(usize, usize)> = (0..4).flat_map(|a| (a + 1..4).map(move |b| (a, b))).collect();
        let c = anticlique_complex(4, &k4, GraphClass::Forests).unwrap();
        assert_eq!(c, Complex::uniform(2, 4).unwrap());
        let c5: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        assert_eq!(girth(5, &c5), Some(5));
        let c = anticlique_complex(5, &c5, GraphClass::NoCycleUpTo(4)).unwrap();
        assert!(c.is_face(0b11111));
        let c = anticlique_complex(5, &c5, GraphClass::NoCycleUpTo(5)).unwrap();
        assert_eq!(c, Complex::uniform(4, 5).unwrap());
        assert_eq!(
            anticlique_complex(4, &k4, GraphClass::TriangleFree).unwrap(),
            Complex::uniform(2, 4).unwrap()
        );
    }

    #[test]
    fn cone_and_contraction_undo_each_other() {
        let c = Complex::new(4, [s(&[1, 2, 3]), s(&[3, 4])]).unwrap();
        let u = up(&plus_point(&c, "p").unwrap());
        let back = u.contraction(bits::bit(4)).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn paving_closed_form_matches_iteration() {
        let c = Complex::paving_from_defect(6, 2, &[s(&[1, 2, 3]), s(&[4, 5, 6]), s(&[1, 4, 5])])
            .unwrap();
        for m in 0..4 {
            assert_eq!(up_iter_paving(&c, m).unwrap(), up_iter_generic(&c, m));
        }
    }
}
