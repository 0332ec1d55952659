//! Finite groups given by Cayley tables, and homomorphisms out of
//! fundamental-group presentations.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complex::smith_decomposition;
use crate::error::{Error, Result};
use crate::groupoid::{generator_name, relation_matrix, Letter, Presentation, Word};
use crate::space::Arrow;

/// Groups up to this order get an exhaustive associativity check.
pub const EXHAUSTIVE_ASSOCIATIVITY_LIMIT: usize = 64;
/// Number of random triples checked for larger groups.
pub const SAMPLED_ASSOCIATIVITY_TRIPLES: usize = 10_000;

/// A finite group with elements `0..order` and a validated Cayley table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
}

impl FiniteGroup {
    /// `Z/n` with labels `0..n`.
    pub fn cyclic(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroOrder);
        }
        let labels = (0..n).map(|i| i.to_string()).collect();
        let table = (0..n)
            .map(|a| (0..n).map(|b| (a + b) % n).collect())
            .collect();
        Self::from_table(labels, table)
    }

    /// The symmetric group on `n <= 9` letters. Elements are labelled by
    /// one-line notation (`"213"` swaps the first two letters) and listed in
    /// lexicographic order, so the identity comes first. The product `p*q`
    /// applies `q` first.
    pub fn symmetric(n: usize) -> Result<Self> {
        if n == 0 || n > 9 {
            return Err(Error::MalformedTable(format!(
                "symmetric group on {n} letters"
            )));
        }
        let mut perms: Vec<Vec<usize>> = vec![(0..n).collect()];
        let mut i = 0;
        while i < perms.len() {
            let p = perms[i].clone();
            for a in 0..n {
                for b in a + 1..n {
                    let mut q = p.clone();
                    q.swap(a, b);
                    if !perms.contains(&q) {
                        perms.push(q);
                    }
                }
            }
            i += 1;
        }
        perms.sort();
        let labels: Vec<String> = perms
            .iter()
            .map(|p| p.iter().map(|v| char::from(b'1' + *v as u8)).collect())
            .collect();
        let pos: HashMap<Vec<usize>, usize> = perms
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();
        let table = perms
            .iter()
            .map(|p| {
                perms
                    .iter()
                    .map(|q| pos[&(0..n).map(|k| p[q[k]]).collect::<Vec<_>>()])
                    .collect()
            })
            .collect();
        Self::from_table(labels, table)
    }

    /// Validates a Cayley table: `table[a][b]` is the index of `a * b`.
    pub fn from_table(labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::ZeroOrder);
        }
        let mut index = HashMap::with_capacity(n);
        for (i, l) in labels.iter().enumerate() {
            if l.is_empty() || l.chars().any(char::is_whitespace) {
                return Err(Error::MalformedTable(format!("bad element label `{l}`")));
            }
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::MalformedTable(format!("duplicate element `{l}`")));
            }
        }
        if table.len() != n || table.iter().any(|r| r.len() != n) {
            return Err(Error::MalformedTable(format!("table must be {n}x{n}")));
        }
        if table.iter().flatten().any(|&v| v >= n) {
            return Err(Error::MalformedTable("entry out of range".into()));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or(Error::NoIdentity)?;
        let mut inverse = Vec::with_capacity(n);
        for a in 0..n {
            let inv = (0..n)
                .find(|&b| table[a][b] == identity && table[b][a] == identity)
                .ok_or_else(|| Error::NoInverse(labels[a].clone()))?;
            inverse.push(inv);
        }
        let g = FiniteGroup {
            labels,
            index,
            table,
            identity,
            inverse,
        };
        g.check_associative()?;
        Ok(g)
    }

    /// Table given by element labels, row `a` listing `a * b` for each `b`.
    pub fn from_label_table(labels: Vec<String>, rows: &[Vec<String>]) -> Result<Self> {
        let pos: HashMap<&str, usize> = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.as_str(), i))
            .collect();
        let table = rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|l| {
                        pos.get(l.as_str())
                            .copied()
                            .ok_or_else(|| Error::UnknownElement(l.clone()))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_table(labels, table)
    }

    fn check_associative(&self) -> Result<()> {
        let n = self.order();
        let check = |a: usize, b: usize, c: usize| {
            if self.op(self.op(a, b), c) != self.op(a, self.op(b, c)) {
                Err(Error::NotAssociative(
                    self.labels[a].clone(),
                    self.labels[b].clone(),
                    self.labels[c].clone(),
                ))
            } else {
                Ok(())
            }
        };
        if n <= EXHAUSTIVE_ASSOCIATIVITY_LIMIT {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        check(a, b, c)?;
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
            for _ in 0..SAMPLED_ASSOCIATIVITY_TRIPLES {
                check(
                    rng.gen_range(0..n),
                    rng.gen_range(0..n),
                    rng.gen_range(0..n),
                )?;
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownElement(label.to_string()))
    }

    /// A pair that does not commute, if any.
    pub fn non_commuting_pair(&self) -> Option<(usize, usize)> {
        self.elements()
            .flat_map(|a| self.elements().map(move |b| (a, b)))
            .find(|&(a, b)| self.op(a, b) != self.op(b, a))
    }

    pub fn is_abelian(&self) -> bool {
        self.non_commuting_pair().is_none()
    }

    fn check_elements(&self, s: &BTreeSet<usize>) -> Result<()> {
        match s.iter().find(|&&a| a >= self.order()) {
            Some(a) => Err(Error::UnknownElement(a.to_string())),
            None => Ok(()),
        }
    }

    /// Closure of `s ∪ {e}` under products and inverses.
    pub fn subgroup_generated(&self, s: &BTreeSet<usize>) -> Result<BTreeSet<usize>> {
        self.check_elements(s)?;
        let mut h: BTreeSet<usize> = BTreeSet::from([self.identity]);
        let mut frontier: Vec<usize> = vec![self.identity];
        let gens: Vec<usize> = s.iter().flat_map(|&g| [g, self.inv(g)]).collect();
        while let Some(x) = frontier.pop() {
            for &g in &gens {
                let y = self.op(x, g);
                if h.insert(y) {
                    frontier.push(y);
                }
            }
        }
        Ok(h)
    }

    pub fn is_subgroup(&self, h: &BTreeSet<usize>) -> bool {
        h.contains(&self.identity)
            && h.iter().all(|&a| a < self.order())
            && h.iter()
                .all(|&a| h.contains(&self.inv(a)) && h.iter().all(|&b| h.contains(&self.op(a, b))))
    }

    /// The index `[G : H]`.
    pub fn coset_count(&self, h: &BTreeSet<usize>) -> Result<usize> {
        if !self.is_subgroup(h) {
            return Err(Error::NotASubgroup);
        }
        Ok(self.order() / h.len())
    }

    /// Least element of each left coset `gH`, ascending.
    pub fn left_coset_representatives(&self, h: &BTreeSet<usize>) -> Result<Vec<usize>> {
        if !self.is_subgroup(h) {
            return Err(Error::NotASubgroup);
        }
        let mut covered = vec![false; self.order()];
        let mut reps = Vec::new();
        for g in self.elements() {
            if covered[g] {
                continue;
            }
            reps.push(g);
            for &x in h {
                covered[self.op(g, x)] = true;
            }
        }
        Ok(reps)
    }

    /// Product of letter images in order; inverse letters use inverses.
    pub fn evaluate<F>(&self, word: &Word, mut image: F) -> usize
    where
        F: FnMut(Arrow) -> usize,
    {
        word.letters().iter().fold(self.identity, |acc, l| {
            let v = image(l.arrow);
            self.op(acc, if l.inverse { self.inv(v) } else { v })
        })
    }
}

/// A homomorphism from a presented group into a finite group, validated on
/// every relator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupHom {
    domain: Presentation,
    codomain: FiniteGroup,
    images: BTreeMap<Arrow, usize>,
}

/// Checks that `images` kills every relator of `p`.
pub fn hom_from_presentation(
    p: &Presentation,
    g: &FiniteGroup,
    images: BTreeMap<Arrow, usize>,
) -> Result<GroupHom> {
    for (&a, &v) in &images {
        if p.generator_index(a).is_none() {
            return Err(Error::UnknownGenerator(generator_name(p.space(), a)));
        }
        if v >= g.order() {
            return Err(Error::UnknownElement(v.to_string()));
        }
    }
    if let Some(&a) = p.generators().iter().find(|a| !images.contains_key(a)) {
        return Err(Error::MissingImage(generator_name(p.space(), a)));
    }
    for (index, r) in p.relators().iter().enumerate() {
        let value = g.evaluate(r, |a| images[&a]);
        if value != g.identity() {
            return Err(Error::RelatorViolated {
                index,
                relator: r.display(p.space()),
                value: g.label(value).to_string(),
            });
        }
    }
    Ok(GroupHom {
        domain: p.clone(),
        codomain: g.clone(),
        images,
    })
}

impl GroupHom {
    /// The homomorphism sending every generator to the identity.
    pub fn trivial(p: &Presentation, g: &FiniteGroup) -> Self {
        GroupHom {
            domain: p.clone(),
            codomain: g.clone(),
            images: p.generators().iter().map(|&a| (a, g.identity())).collect(),
        }
    }

    pub fn domain(&self) -> &Presentation {
        &self.domain
    }

    pub fn codomain(&self) -> &FiniteGroup {
        &self.codomain
    }

    pub fn images(&self) -> &BTreeMap<Arrow, usize> {
        &self.images
    }

    pub fn image_of(&self, generator: Arrow) -> Option<usize> {
        self.images.get(&generator).copied()
    }

    /// Evaluates a word over the domain's generators.
    pub fn evaluate(&self, w: &Word) -> Result<usize> {
        if let Some(l) = w
            .letters()
            .iter()
            .find(|l| !self.images.contains_key(&l.arrow))
        {
            return Err(Error::UnknownGenerator(generator_name(
                self.domain.space(),
                l.arrow,
            )));
        }
        Ok(self.codomain.evaluate(w, |a| self.images[&a]))
    }

    pub fn evaluate_letter(&self, l: Letter) -> Result<usize> {
        self.evaluate(&Word::new(vec![l]))
    }

    /// The subgroup generated by the generator images.
    pub fn image(&self) -> BTreeSet<usize> {
        self.codomain
            .subgroup_generated(&self.images.values().copied().collect())
            .expect("images are group elements")
    }

    pub fn is_trivial(&self) -> bool {
        self.images.values().all(|&v| v == self.codomain.identity())
    }

    pub fn is_surjective(&self) -> bool {
        self.image().len() == self.codomain.order()
    }

    /// `[G : im]`, the size of the cokernel as a pointed set.
    pub fn cokernel_size(&self) -> usize {
        self.codomain.order() / self.image().len()
    }

    /// `g[a<d] -> 2` lines.
    pub fn display(&self) -> String {
        self.images
            .iter()
            .map(|(&a, &v)| {
                format!(
                    "{} -> {}",
                    generator_name(self.domain.space(), a),
                    self.codomain.label(v)
                )
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

/// A uniformly random homomorphism from the presented group to `Z/n`.
///
/// Homomorphisms into an abelian group factor through the abelianization.
/// With `L R V = D` the Smith decomposition of the relator matrix `R`, the
/// solutions of `R x = 0 (mod n)` are `x = V y` where `y_i` is any multiple
/// of `n / gcd(d_i, n)` for pivot rows and arbitrary past the rank.
pub fn random_cyclic_hom<R: Rng + ?Sized>(
    p: &Presentation,
    n: usize,
    rng: &mut R,
) -> Result<GroupHom> {
    let g = FiniteGroup::cyclic(n)?;
    let m = p.generators().len();
    let dec = smith_decomposition(&relation_matrix(p));
    let big_n = BigInt::from(n);
    let mut y: Vec<BigInt> = Vec::with_capacity(m);
    for i in 0..m {
        let step = if i < dec.rank {
            let d = &dec.diagonal[(i, i)];
            &big_n / d.gcd(&big_n)
        } else {
            BigInt::from(1)
        };
        let choices = (&big_n / &step).to_usize().expect("bounded by n");
        y.push(step * BigInt::from(rng.gen_range(0..choices)));
    }
    let mut images = BTreeMap::new();
    for (j, &a) in p.generators().iter().enumerate() {
        let mut x = BigInt::from(0);
        for (i, yi) in y.iter().enumerate() {
            x += &dec.right[(j, i)] * yi;
        }
        let v = x.mod_floor(&big_n).to_usize().expect("reduced mod n");
        images.insert(a, v);
    }
    hom_from_presentation(p, &g, images)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupoid::{extend_forest_to_tree, pi1_presentation, SpanningTree};
    use crate::space::FiniteSpace;

    fn circle_presentation() -> Presentation {
        let x = FiniteSpace::from_relations(
            ["a", "b", "c", "d"],
            [("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")],
        )
        .unwrap();
        let t = SpanningTree::from_edges(
            &x,
            [
                x.arrow("a", "c").unwrap(),
                x.arrow("b", "c").unwrap(),
                x.arrow("b", "d").unwrap(),
            ],
        )
        .unwrap();
        pi1_presentation(&x, 0, &t).unwrap()
    }

    fn set(v: &[usize]) -> BTreeSet<usize> {
        v.iter().copied().collect()
    }

    #[test]
    fn cyclic_groups() {
        let z6 = FiniteGroup::cyclic(6).unwrap();
        assert_eq!(z6.order(), 6);
        assert_eq!(z6.op(2, 4), 0);
        assert_eq!(z6.identity(), 0);
        assert_eq!(FiniteGroup::cyclic(1).unwrap().order(), 1);
        let z2 = FiniteGroup::cyclic(2).unwrap();
        assert!(z2.elements().all(|a| z2.inv(a) == a));
        assert_eq!(FiniteGroup::cyclic(0), Err(Error::ZeroOrder));
    }

    #[test]
    fn table_validation() {
        let l = |v: &[&str]| v.iter().map(|s| s.to_string()).collect::<Vec<_>>();
        assert!(FiniteGroup::from_table(l(&["e", "x"]), vec![vec![0, 1], vec![1, 0]]).is_ok());
        assert_eq!(
            FiniteGroup::from_table(l(&["p", "e"]), vec![vec![0, 0], vec![0, 1]]),
            Err(Error::NoInverse("p".into()))
        );
        assert_eq!(
            FiniteGroup::from_table(l(&["p", "q"]), vec![vec![0, 0], vec![0, 0]]),
            Err(Error::NoIdentity)
        );
        assert!(matches!(
            FiniteGroup::from_table(l(&["e", "x"]), vec![vec![0, 1]]),
            Err(Error::MalformedTable(_))
        ));
        // Identity e and every element self-inverse, but (c*a)*b = c while
        // c*(a*b) = e.
        let bad = vec![
            vec![0, 1, 2, 3],
            vec![1, 0, 3, 2],
            vec![2, 3, 0, 1],
            vec![3, 1, 2, 0],
        ];
        assert!(matches!(
            FiniteGroup::from_table(l(&["e", "a", "b", "c"]), bad),
            Err(Error::NotAssociative(..))
        ));
    }

    #[test]
    fn s3_is_non_abelian() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        assert_eq!(s3.order(), 6);
        assert_eq!(s3.label(s3.identity()), "123");
        let (a, b) = s3.non_commuting_pair().unwrap();
        assert_ne!(s3.op(a, b), s3.op(b, a));
        // Exhaustive triple check, independent of the constructor.
        for a in s3.elements() {
            for b in s3.elements() {
                for c in s3.elements() {
                    assert_eq!(s3.op(s3.op(a, b), c), s3.op(a, s3.op(b, c)));
                }
            }
        }
        let rows: Vec<Vec<String>> = s3
            .elements()
            .map(|a| {
                s3.elements()
                    .map(|b| s3.label(s3.op(a, b)).to_string())
                    .collect()
            })
            .collect();
        let again = FiniteGroup::from_label_table(s3.labels().to_vec(), &rows).unwrap();
        assert_eq!(again, s3);
    }

    #[test]
    fn generated_subgroups_and_cosets() {
        let z6 = FiniteGroup::cyclic(6).unwrap();
        assert_eq!(z6.subgroup_generated(&set(&[2])).unwrap(), set(&[0, 2, 4]));
        assert_eq!(z6.subgroup_generated(&set(&[])).unwrap(), set(&[0]));
        assert_eq!(z6.subgroup_generated(&set(&[1])).unwrap().len(), 6);
        assert!(z6.subgroup_generated(&set(&[9])).is_err());

        assert_eq!(z6.coset_count(&set(&[0, 2, 4])).unwrap(), 2);
        assert_eq!(z6.coset_count(&z6.elements().collect()).unwrap(), 1);
        assert_eq!(z6.coset_count(&set(&[0])).unwrap(), 6);
        assert_eq!(z6.coset_count(&set(&[0, 1])), Err(Error::NotASubgroup));
        assert_eq!(
            z6.left_coset_representatives(&set(&[0, 2, 4])).unwrap(),
            vec![0, 1]
        );
    }

    #[test]
    fn homs_from_presentations() {
        let p = circle_presentation();
        let z6 = FiniteGroup::cyclic(6).unwrap();
        let g = p.generators()[0];
        let h = hom_from_presentation(&p, &z6, BTreeMap::from([(g, 2)])).unwrap();
        assert_eq!(h.evaluate_letter(Letter::inv(g)).unwrap(), 4);
        assert_eq!(h.image(), set(&[0, 2, 4]));
        assert_eq!(h.cokernel_size(), 2);
        assert!(!h.is_surjective());
        assert_eq!(h.display(), "g[a<d] -> 2");

        let zero = GroupHom::trivial(&p, &z6);
        assert!(zero.is_trivial());
        assert!(hom_from_presentation(&p, &z6, zero.images().clone()).is_ok());

        assert_eq!(
            hom_from_presentation(&p, &z6, BTreeMap::new()),
            Err(Error::MissingImage("g[a<d]".into()))
        );
    }

    #[test]
    fn relator_violation_is_reported() {
        // <g | g^-1> from the 3-chain: any non-trivial image is rejected.
        let c = FiniteSpace::from_relations(["x", "y", "z"], [("x", "y"), ("y", "z")]).unwrap();
        let t =
            SpanningTree::from_edges(&c, [c.arrow("x", "y").unwrap(), c.arrow("y", "z").unwrap()])
                .unwrap();
        let p = pi1_presentation(&c, 0, &t).unwrap();
        let z6 = FiniteGroup::cyclic(6).unwrap();
        let err =
            hom_from_presentation(&p, &z6, BTreeMap::from([(p.generators()[0], 2)])).unwrap_err();
        assert_eq!(
            err,
            Error::RelatorViolated {
                index: 0,
                relator: "g[x<z]^-1".into(),
                value: "4".into()
            }
        );
    }

    #[test]
    fn random_cyclic_homs_respect_relators() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        // Chain of five points: many generators and relators, trivial π₁.
        let pts = ["p0", "p1", "p2", "p3", "p4"];
        let pairs: Vec<(&str, &str)> = pts.windows(2).map(|w| (w[0], w[1])).collect();
        let x = FiniteSpace::from_relations(pts, pairs).unwrap();
        let t = extend_forest_to_tree(&x, []).unwrap();
        let p = pi1_presentation(&x, 0, &t).unwrap();
        for n in 1..=6 {
            let h = random_cyclic_hom(&p, n, &mut rng).unwrap();
            assert!(h.is_trivial());
        }
        let p = circle_presentation();
        let seen: BTreeSet<usize> = (0..200)
            .map(|_| random_cyclic_hom(&p, 6, &mut rng).unwrap().images()[&p.generators()[0]])
            .collect();
        assert_eq!(seen.len(), 6);
    }
}
