//! Order complexes and their integral simplicial homology.
//!
//! The order complex of a finite poset has the points as vertices and the
//! non-empty chains as simplices. Its homology agrees with that of the
//! space, so it serves as an independent check on fundamental-group
//! computations: `H_1` must equal the abelianized `π₁`.
//!
//! Non-T0 spaces are handled by passing through the Kolmogorov quotient,
//! which is a homotopy equivalence for finite spaces; see
//! [`homology_of_space`].

mod snf;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub use snf::{smith_decomposition, smith_normal_form, IntMatrix, SmithDecomposition, SmithForm};

use crate::error::{Error, Result};
use crate::space::FiniteSpace;

/// Default top dimension for which homology is reported.
pub const DEFAULT_MAX_DIM: usize = 3;

/// A finite abstract simplicial complex. Simplices are sorted vertex-index
/// lists, grouped by dimension and sorted lexicographically within one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: Vec<String>,
    simplices: Vec<Vec<Vec<usize>>>,
    truncated_at: Option<usize>,
}

impl SimplicialComplex {
    /// The complex generated by `facets`: every non-empty subset of a facet
    /// is a simplex and every vertex is present.
    pub fn from_facets(vertices: Vec<String>, facets: &[Vec<usize>]) -> Result<Self> {
        let n = vertices.len();
        let mut all: std::collections::BTreeSet<Vec<usize>> = (0..n).map(|v| vec![v]).collect();
        for f in facets {
            let mut f = f.clone();
            f.sort_unstable();
            f.dedup();
            if let Some(&v) = f.iter().find(|&&v| v >= n) {
                return Err(Error::PointOutOfRange(v));
            }
            let k = f.len();
            for mask in 1u64..(1u64 << k) {
                let s: Vec<usize> = (0..k)
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| f[i])
                    .collect();
                all.insert(s);
            }
        }
        let mut simplices: Vec<Vec<Vec<usize>>> = Vec::new();
        for s in all {
            let d = s.len() - 1;
            if simplices.len() <= d {
                simplices.resize(d + 1, Vec::new());
            }
            simplices[d].push(s);
        }
        for level in &mut simplices {
            level.sort();
        }
        Ok(SimplicialComplex {
            vertices,
            simplices,
            truncated_at: None,
        })
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    /// Simplices of dimension `d` (empty beyond the top dimension).
    pub fn simplices(&self, d: usize) -> &[Vec<usize>] {
        self.simplices.get(d).map_or(&[], Vec::as_slice)
    }

    /// Highest dimension with at least one simplex.
    pub fn dimension(&self) -> usize {
        self.simplices.len().saturating_sub(1)
    }

    /// `Some(d)` if simplices above dimension `d` were not generated.
    pub fn truncated_at(&self) -> Option<usize> {
        self.truncated_at
    }

    pub fn simplex_count(&self) -> usize {
        self.simplices.iter().map(Vec::len).sum()
    }

    /// Alternating sum of simplex counts.
    pub fn euler_characteristic(&self) -> i64 {
        self.simplices
            .iter()
            .enumerate()
            .map(|(d, s)| {
                if d % 2 == 0 {
                    s.len() as i64
                } else {
                    -(s.len() as i64)
                }
            })
            .sum()
    }
}

/// Builds the order complex of a T0 space: all non-empty chains.
pub fn order_complex(x: &FiniteSpace) -> Result<SimplicialComplex> {
    build_order_complex(x, None)
}

/// Like [`order_complex`] but only generates chains of dimension at most
/// `max_dim` (so at most `max_dim + 1` points).
pub fn order_complex_up_to(x: &FiniteSpace, max_dim: usize) -> Result<SimplicialComplex> {
    build_order_complex(x, Some(max_dim))
}

fn build_order_complex(x: &FiniteSpace, max_dim: Option<usize>) -> Result<SimplicialComplex> {
    for a in x.points() {
        for b in a + 1..x.len() {
            if x.equivalent(a, b) {
                return Err(Error::NotT0(x.label(a).into(), x.label(b).into()));
            }
        }
    }
    let comparable = |a: usize, b: usize| x.leq(a, b) || x.leq(b, a);
    let mut simplices: Vec<Vec<Vec<usize>>> = Vec::new();
    let mut truncated = false;
    let mut stack: Vec<Vec<usize>> = x.points().rev().map(|p| vec![p]).collect();
    while let Some(chain) = stack.pop() {
        let d = chain.len() - 1;
        if simplices.len() <= d {
            simplices.resize(d + 1, Vec::new());
        }
        let last = *chain.last().expect("non-empty");
        let extensions: Vec<usize> = (last + 1..x.len())
            .filter(|&p| chain.iter().all(|&c| comparable(c, p)))
            .collect();
        if max_dim.is_some_and(|m| d >= m) {
            truncated |= !extensions.is_empty();
        } else {
            for &p in extensions.iter().rev() {
                let mut next = chain.clone();
                next.push(p);
                stack.push(next);
            }
        }
        simplices[d].push(chain);
    }
    for level in &mut simplices {
        level.sort();
    }
    Ok(SimplicialComplex {
        vertices: x.labels().to_vec(),
        simplices,
        truncated_at: if truncated { max_dim } else { None },
    })
}

/// Simplicial chain complex with integer boundary matrices. `boundary(n)`
/// maps n-chains to (n-1)-chains: rows index (n-1)-simplices and columns
/// index n-simplices, both in the complex's order.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    ranks: Vec<usize>,
    boundaries: Vec<IntMatrix>,
}

impl ChainComplex {
    /// Number of n-simplices (0 above the top dimension).
    pub fn rank(&self, n: usize) -> usize {
        self.ranks.get(n).copied().unwrap_or(0)
    }

    /// The boundary map out of dimension `n`; `∂_0` is the zero map to the
    /// zero module.
    pub fn boundary(&self, n: usize) -> IntMatrix {
        match self.boundaries.get(n) {
            Some(m) => m.clone(),
            None => IntMatrix::zeros(self.rank(n.saturating_sub(1)), self.rank(n)),
        }
    }

    pub fn top_dimension(&self) -> usize {
        self.ranks.len().saturating_sub(1)
    }
}

/// Standard alternating-sign boundary under the fixed vertex order.
/// Verifies `∂∂ = 0` before returning.
pub fn chain_complex(k: &SimplicialComplex) -> ChainComplex {
    let top = k.simplices.len();
    let ranks: Vec<usize> = k.simplices.iter().map(Vec::len).collect();
    let mut boundaries = Vec::with_capacity(top);
    boundaries.push(IntMatrix::zeros(0, k.simplices(0).len()));
    for n in 1..top {
        let faces = k.simplices(n - 1);
        let mut m = IntMatrix::zeros(faces.len(), k.simplices(n).len());
        for (j, s) in k.simplices(n).iter().enumerate() {
            for omit in 0..s.len() {
                let face: Vec<usize> = s
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != omit)
                    .map(|(_, &v)| v)
                    .collect();
                let row = faces
                    .binary_search(&face)
                    .expect("complex is closed under faces");
                m[(row, j)] = if omit % 2 == 0 {
                    BigInt::one()
                } else {
                    -BigInt::one()
                };
            }
        }
        boundaries.push(m);
    }
    for n in 2..top {
        assert!(
            boundaries[n - 1].mul(&boundaries[n]).is_zero(),
            "boundary of boundary is non-zero in dimension {n}"
        );
    }
    ChainComplex { ranks, boundaries }
}

/// A finitely generated abelian group `Z^betti ⊕ Z/t1 ⊕ ... ⊕ Z/tk` with
/// `t1 | t2 | ... | tk`, all `ti > 1`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct HomologyGroup {
    pub betti: usize,
    pub torsion: Vec<BigInt>,
}

impl HomologyGroup {
    pub fn new<I: IntoIterator<Item = u64>>(betti: usize, torsion: I) -> Self {
        HomologyGroup {
            betti,
            torsion: torsion.into_iter().map(BigInt::from).collect(),
        }
    }

    pub fn free(betti: usize) -> Self {
        Self::new(betti, [])
    }

    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn is_trivial(&self) -> bool {
        self.betti == 0 && self.torsion.is_empty()
    }

    /// Cokernel data from invariant factors: `generators - rank` free part
    /// and the factors above 1 as torsion.
    pub fn from_invariant_factors(generators: usize, form: &SmithForm) -> Self {
        HomologyGroup {
            betti: generators - form.rank,
            torsion: form
                .invariant_factors
                .iter()
                .filter(|d| !d.is_one())
                .cloned()
                .collect(),
        }
    }
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        match self.betti {
            0 => {}
            1 => terms.push("Z".to_string()),
            b => terms.push(format!("Z^{b}")),
        }
        terms.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" ⊕ "))
        }
    }
}

/// `H_n(K; Z)`: betti `= dim C_n - rank ∂_n - rank ∂_{n+1}`, torsion from
/// the invariant factors of `∂_{n+1}`.
pub fn homology(k: &SimplicialComplex, n: usize) -> Result<HomologyGroup> {
    let cc = chain_complex(k);
    homology_of_chains(k, &cc, n)
}

/// Homology in every dimension `0..=max_dim`.
pub fn homology_up_to(k: &SimplicialComplex, max_dim: usize) -> Result<Vec<HomologyGroup>> {
    let cc = chain_complex(k);
    (0..=max_dim)
        .map(|n| homology_of_chains(k, &cc, n))
        .collect()
}

fn homology_of_chains(k: &SimplicialComplex, cc: &ChainComplex, n: usize) -> Result<HomologyGroup> {
    if let Some(t) = k.truncated_at {
        if n + 1 > t {
            return Err(Error::BeyondTruncation(n));
        }
    }
    let dim = cc.rank(n);
    if dim == 0 {
        return Ok(HomologyGroup::trivial());
    }
    let rank_in = if n == 0 {
        0
    } else {
        smith_normal_form(&cc.boundary(n)).rank
    };
    let out = smith_normal_form(&cc.boundary(n + 1));
    Ok(HomologyGroup {
        betti: dim - rank_in - out.rank,
        torsion: out
            .invariant_factors
            .into_iter()
            .filter(|d| !d.is_one() && !d.is_zero())
            .collect(),
    })
}

/// Homology of a possibly non-T0 space, computed on its Kolmogorov
/// quotient.
pub fn homology_of_space(x: &FiniteSpace, n: usize) -> Result<HomologyGroup> {
    let q = x.kolmogorov_quotient();
    let k = order_complex_up_to(&q.space, n + 1)?;
    homology(&k, n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn circle() -> FiniteSpace {
        FiniteSpace::from_relations(
            ["a", "b", "c", "d"],
            [("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")],
        )
        .unwrap()
    }

    fn chain3() -> FiniteSpace {
        FiniteSpace::from_relations(["x", "y", "z"], [("x", "y"), ("y", "z")]).unwrap()
    }

    /// Every totally ordered subset, by brute force over all subsets.
    fn chains_brute_force(x: &FiniteSpace) -> Vec<Vec<usize>> {
        let n = x.len();
        let mut out = Vec::new();
        for mask in 1u32..(1 << n) {
            let s: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
            if s.iter()
                .all(|&a| s.iter().all(|&b| x.leq(a, b) || x.leq(b, a)))
            {
                out.push(s);
            }
        }
        out.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        out
    }

    #[test]
    fn circle_order_complex_is_a_square() {
        let k = order_complex(&circle()).unwrap();
        assert_eq!(k.simplices(0).len(), 4);
        assert_eq!(
            k.simplices(1),
            &[vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3]]
        );
        assert!(k.simplices(2).is_empty());
        let mut flat: Vec<Vec<usize>> = (0..=k.dimension())
            .flat_map(|d| k.simplices(d).to_vec())
            .collect();
        flat.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        assert_eq!(flat, chains_brute_force(&circle()));
    }

    #[test]
    fn chain_order_complex_is_a_full_simplex() {
        let k = order_complex(&chain3()).unwrap();
        assert_eq!(k.simplices(2), &[vec![0, 1, 2]]);
        assert_eq!(k.simplex_count(), 7);
    }

    #[test]
    fn antichain_has_isolated_vertices() {
        let x = FiniteSpace::from_relations(["p", "q", "r"], Vec::<(&str, &str)>::new()).unwrap();
        let k = order_complex(&x).unwrap();
        assert_eq!(k.dimension(), 0);
        assert_eq!(homology(&k, 0).unwrap(), HomologyGroup::free(3));
    }

    #[test]
    fn non_t0_is_rejected() {
        let x = FiniteSpace::from_relations(["x", "y"], [("x", "y"), ("y", "x")]).unwrap();
        assert!(matches!(order_complex(&x), Err(Error::NotT0(..))));
        assert_eq!(homology_of_space(&x, 0).unwrap(), HomologyGroup::free(1));
    }

    #[test]
    fn single_edge_boundary() {
        let k =
            SimplicialComplex::from_facets(vec!["u".into(), "v".into()], &[vec![0, 1]]).unwrap();
        let cc = chain_complex(&k);
        let d1 = cc.boundary(1);
        assert_eq!(d1, IntMatrix::from_rows(&[vec![-1i64], vec![1]]));
    }

    #[test]
    fn boundary_squares_to_zero_on_full_simplex() {
        let k = SimplicialComplex::from_facets(
            (0..4).map(|i| i.to_string()).collect(),
            &[vec![0, 1, 2, 3]],
        )
        .unwrap();
        let cc = chain_complex(&k);
        for n in 2..=3 {
            assert!(cc.boundary(n - 1).mul(&cc.boundary(n)).is_zero());
        }
    }

    #[test]
    fn square_boundary_rank() {
        let k = order_complex(&circle()).unwrap();
        let cc = chain_complex(&k);
        let d1 = cc.boundary(1);
        assert_eq!((d1.rows(), d1.cols()), (4, 4));
        assert_eq!(smith_normal_form(&d1).rank, 3);
    }

    #[test]
    fn homology_examples() {
        let k = order_complex(&circle()).unwrap();
        assert_eq!(homology(&k, 1).unwrap(), HomologyGroup::free(1));
        assert_eq!(homology(&k, 0).unwrap(), HomologyGroup::free(1));
        let k = order_complex(&chain3()).unwrap();
        assert_eq!(homology(&k, 1).unwrap(), HomologyGroup::trivial());
        let two =
            FiniteSpace::from_relations(["p", "q", "r", "s"], [("p", "q"), ("r", "s")]).unwrap();
        let k = order_complex(&two).unwrap();
        assert_eq!(homology(&k, 0).unwrap().betti, 2);
    }

    #[test]
    fn sphere_model_has_top_class() {
        // Three levels of two points, each point above both points of the
        // level below: the minimal finite model of the 2-sphere.
        let mut pairs = Vec::new();
        for (lo, hi) in [(["a0", "a1"], ["b0", "b1"]), (["b0", "b1"], ["c0", "c1"])] {
            for l in lo {
                for h in hi {
                    pairs.push((l, h));
                }
            }
        }
        let s2 = FiniteSpace::from_relations(["a0", "a1", "b0", "b1", "c0", "c1"], pairs).unwrap();
        let k = order_complex(&s2).unwrap();
        assert_eq!(homology(&k, 2).unwrap(), HomologyGroup::free(1));
        assert_eq!(homology(&k, 1).unwrap(), HomologyGroup::trivial());
    }

    #[test]
    fn projective_plane_has_two_torsion() {
        // Six-vertex triangulation of RP^2.
        let facets: Vec<Vec<usize>> = [
            [1, 2, 4],
            [1, 2, 6],
            [1, 3, 5],
            [1, 3, 6],
            [1, 4, 5],
            [2, 3, 4],
            [2, 3, 5],
            [2, 5, 6],
            [3, 4, 6],
            [4, 5, 6],
        ]
        .iter()
        .map(|f| f.iter().map(|v| v - 1).collect())
        .collect();
        let k = SimplicialComplex::from_facets((1..=6).map(|i| i.to_string()).collect(), &facets)
            .unwrap();
        assert_eq!(k.euler_characteristic(), 1);
        assert_eq!(homology(&k, 1).unwrap(), HomologyGroup::new(0, [2]));
        assert_eq!(homology(&k, 2).unwrap(), HomologyGroup::trivial());
    }

    #[test]
    fn truncation_is_reported() {
        let k = order_complex_up_to(&chain3(), 1).unwrap();
        assert_eq!(k.truncated_at(), Some(1));
        assert!(homology(&k, 0).is_ok());
        assert_eq!(homology(&k, 1), Err(Error::BeyondTruncation(1)));
        let full = order_complex_up_to(&circle(), 3).unwrap();
        assert_eq!(full.truncated_at(), None);
    }

    #[test]
    fn display_format() {
        assert_eq!(HomologyGroup::trivial().to_string(), "0");
        assert_eq!(HomologyGroup::free(1).to_string(), "Z");
        assert_eq!(HomologyGroup::new(2, [2, 4]).to_string(), "Z^2 ⊕ Z/2 ⊕ Z/4");
    }
}
