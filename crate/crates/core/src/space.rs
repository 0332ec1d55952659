//! Finite Alexandroff spaces stored as finite preorders.
//!
//! A finite topological space is the same thing as a finite preorder: the
//! specialization order `x <= y` holds iff `x` lies in the minimal open set
//! `U_y`. Open sets are exactly the down-sets and closed sets are the
//! up-sets, and continuous maps are exactly the order-preserving ones. The
//! same relation also makes the space a thin category, whose non-identity
//! arrows are listed by [`FiniteSpace::comparabilities`].
//!
//! Points are addressed by their index in input order; that order is the
//! tie-breaker for every deterministic choice made downstream.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::union_find::DisjointSets;

/// A set of point indices.
pub type PointSet = BTreeSet<usize>;

/// A non-identity arrow `src <= dst` of the thin category of a space.
///
/// Ordering is lexicographic on `(src, dst)`, i.e. the canonical scan order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arrow {
    pub src: usize,
    pub dst: usize,
}

impl Arrow {
    pub fn new(src: usize, dst: usize) -> Self {
        Arrow { src, dst }
    }
}

/// A finite preorder together with its point labels.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteSpace {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    leq: Vec<Vec<bool>>,
}

impl fmt::Debug for FiniteSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rels: Vec<String> = self
            .comparabilities()
            .into_iter()
            .map(|a| self.arrow_label(a))
            .collect();
        f.debug_struct("FiniteSpace")
            .field("points", &self.labels)
            .field("relations", &rels)
            .finish()
    }
}

pub(crate) fn validate_label(label: &str) -> Result<()> {
    let bad = label.is_empty()
        || label
            .chars()
            .any(|c| c.is_whitespace() || matches!(c, '<' | '#' | '[' | ']'));
    if bad {
        Err(Error::InvalidLabel(label.to_string()))
    } else {
        Ok(())
    }
}

impl FiniteSpace {
    /// Smallest preorder on `points` containing every pair `(x, y)` as
    /// `x <= y`.
    pub fn from_relations<P, S, R, A, B>(points: P, pairs: R) -> Result<Self>
    where
        P: IntoIterator<Item = S>,
        S: AsRef<str>,
        R: IntoIterator<Item = (A, B)>,
        A: AsRef<str>,
        B: AsRef<str>,
    {
        let labels: Vec<String> = points.into_iter().map(|s| s.as_ref().to_string()).collect();
        let index = Self::build_index(&labels)?;
        let mut idx_pairs = Vec::new();
        for (a, b) in pairs {
            let lookup = |s: &str| {
                index
                    .get(s)
                    .copied()
                    .ok_or_else(|| Error::UnknownPoint(s.to_string()))
            };
            idx_pairs.push((lookup(a.as_ref())?, lookup(b.as_ref())?));
        }
        Self::closure_of(labels, index, &idx_pairs)
    }

    /// Same as [`FiniteSpace::from_relations`] with pairs given as indices.
    pub fn from_index_pairs(labels: Vec<String>, pairs: &[(usize, usize)]) -> Result<Self> {
        let index = Self::build_index(&labels)?;
        Self::closure_of(labels, index, pairs)
    }

    /// Builds a space from an explicit relation matrix, which must already
    /// be reflexive and transitive. No closure is taken.
    pub fn from_matrix(labels: Vec<String>, leq: Vec<Vec<bool>>) -> Result<Self> {
        let index = Self::build_index(&labels)?;
        let n = labels.len();
        if leq.len() != n || leq.iter().any(|row| row.len() != n) {
            return Err(Error::Invariant(
                "relation matrix has the wrong shape".into(),
            ));
        }
        for x in 0..n {
            if !leq[x][x] {
                return Err(Error::NotReflexive(labels[x].clone()));
            }
        }
        for x in 0..n {
            for y in 0..n {
                if !leq[x][y] {
                    continue;
                }
                for z in 0..n {
                    if leq[y][z] && !leq[x][z] {
                        return Err(Error::NotTransitive(
                            labels[x].clone(),
                            labels[y].clone(),
                            labels[z].clone(),
                        ));
                    }
                }
            }
        }
        Ok(FiniteSpace { labels, index, leq })
    }

    fn build_index(labels: &[String]) -> Result<HashMap<String, usize>> {
        if labels.is_empty() {
            return Err(Error::EmptySpace);
        }
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            validate_label(l)?;
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        Ok(index)
    }

    fn closure_of(
        labels: Vec<String>,
        index: HashMap<String, usize>,
        pairs: &[(usize, usize)],
    ) -> Result<Self> {
        let n = labels.len();
        let mut leq = vec![vec![false; n]; n];
        for (x, row) in leq.iter_mut().enumerate() {
            row[x] = true;
        }
        for &(x, y) in pairs {
            if x >= n {
                return Err(Error::PointOutOfRange(x));
            }
            if y >= n {
                return Err(Error::PointOutOfRange(y));
            }
            leq[x][y] = true;
        }
        // Floyd-Warshall style transitive closure.
        for k in 0..n {
            for i in 0..n {
                if !leq[i][k] {
                    continue;
                }
                let row_k = leq[k].clone();
                for (dst, &reach) in leq[i].iter_mut().zip(&row_k) {
                    *dst |= reach;
                }
            }
        }
        Ok(FiniteSpace { labels, index, leq })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    /// Always false: empty spaces are rejected at construction.
    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn points(&self) -> std::ops::Range<usize> {
        0..self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownPoint(label.to_string()))
    }

    /// Resolves a list of labels into a point set.
    pub fn point_set<I, S>(&self, labels: I) -> Result<PointSet>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        labels
            .into_iter()
            .map(|l| self.index_of(l.as_ref()))
            .collect()
    }

    pub(crate) fn check_point(&self, x: usize) -> Result<()> {
        if x < self.len() {
            Ok(())
        } else {
            Err(Error::PointOutOfRange(x))
        }
    }

    /// `x <= y` in the specialization order, i.e. `x` is in `U_y`.
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.leq[x][y]
    }

    /// `x` and `y` are topologically indistinguishable.
    pub fn equivalent(&self, x: usize, y: usize) -> bool {
        self.leq[x][y] && self.leq[y][x]
    }

    pub fn is_arrow(&self, a: Arrow) -> bool {
        a.src != a.dst && a.src < self.len() && a.dst < self.len() && self.leq[a.src][a.dst]
    }

    pub fn arrow_label(&self, a: Arrow) -> String {
        format!("{}<{}", self.labels[a.src], self.labels[a.dst])
    }

    /// Resolves `x<y` given by labels into an arrow of the space.
    pub fn arrow(&self, src: &str, dst: &str) -> Result<Arrow> {
        let a = Arrow::new(self.index_of(src)?, self.index_of(dst)?);
        if self.is_arrow(a) {
            Ok(a)
        } else {
            Err(Error::NotAComparability(format!("{src}<{dst}")))
        }
    }

    /// The minimal open set `U_x`: the down-set of `x`.
    pub fn minimal_open_set(&self, x: usize) -> Result<PointSet> {
        self.check_point(x)?;
        Ok(self.points().filter(|&y| self.leq[y][x]).collect())
    }

    /// The minimal closed set containing `x`: the up-set of `x`.
    pub fn closure_of_point(&self, x: usize) -> Result<PointSet> {
        self.check_point(x)?;
        Ok(self.points().filter(|&y| self.leq[x][y]).collect())
    }

    fn check_set(&self, s: &PointSet) -> Result<()> {
        s.iter().try_for_each(|&x| self.check_point(x))
    }

    /// A set is open iff it is a down-set.
    pub fn is_open(&self, s: &PointSet) -> Result<bool> {
        self.check_set(s)?;
        Ok(s.iter()
            .all(|&x| self.points().all(|y| !self.leq[y][x] || s.contains(&y))))
    }

    /// A set is closed iff it is an up-set.
    pub fn is_closed(&self, s: &PointSet) -> Result<bool> {
        self.check_set(s)?;
        Ok(s.iter()
            .all(|&x| self.points().all(|y| !self.leq[x][y] || s.contains(&y))))
    }

    pub fn complement(&self, s: &PointSet) -> PointSet {
        self.points().filter(|x| !s.contains(x)).collect()
    }

    pub fn is_t0(&self) -> bool {
        self.points()
            .all(|x| (x + 1..self.len()).all(|y| !self.equivalent(x, y)))
    }

    /// Every `x <= y` with `x != y`, in lexicographic point order.
    pub fn comparabilities(&self) -> Vec<Arrow> {
        let n = self.len();
        let mut out = Vec::new();
        for x in 0..n {
            for y in 0..n {
                if x != y && self.leq[x][y] {
                    out.push(Arrow::new(x, y));
                }
            }
        }
        out
    }

    /// Connected components of the comparability graph, each sorted, listed
    /// by least member.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut sets = DisjointSets::new(n);
        for a in self.comparabilities() {
            sets.union(a.src, a.dst);
        }
        sets.classes()
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() == 1
    }

    /// Index of the component containing each point.
    pub fn component_of(&self) -> Vec<usize> {
        let mut out = vec![0; self.len()];
        for (c, comp) in self.connected_components().iter().enumerate() {
            for &x in comp {
                out[x] = c;
            }
        }
        out
    }

    /// The T0 quotient. Each class is labelled by its least member.
    pub fn kolmogorov_quotient(&self) -> KolmogorovQuotient {
        let n = self.len();
        let mut class_of = vec![usize::MAX; n];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for x in 0..n {
            if class_of[x] != usize::MAX {
                continue;
            }
            let members: Vec<usize> = (x..n).filter(|&y| self.equivalent(x, y)).collect();
            for &m in &members {
                class_of[m] = classes.len();
            }
            classes.push(members);
        }
        let labels: Vec<String> = classes.iter().map(|c| self.labels[c[0]].clone()).collect();
        let k = classes.len();
        let leq: Vec<Vec<bool>> = (0..k)
            .map(|i| {
                (0..k)
                    .map(|j| self.leq[classes[i][0]][classes[j][0]])
                    .collect()
            })
            .collect();
        let space =
            FiniteSpace::from_matrix(labels, leq).expect("quotient of a preorder is a preorder");
        let quotient = PointMap {
            source: self.clone(),
            target: space.clone(),
            assignment: class_of,
        };
        let section = PointMap {
            source: space.clone(),
            target: self.clone(),
            assignment: classes.iter().map(|c| c[0]).collect(),
        };
        KolmogorovQuotient {
            space,
            quotient,
            section,
            classes,
        }
    }

    /// Strict pairs `x < y` (`x <= y`, not `y <= x`) with nothing strictly
    /// between them. On a T0 space this is the Hasse diagram.
    pub fn hasse_covers(&self) -> Vec<Arrow> {
        let n = self.len();
        let lt = |x: usize, y: usize| self.leq[x][y] && !self.leq[y][x];
        let mut out = Vec::new();
        for x in 0..n {
            for y in 0..n {
                if lt(x, y) && !(0..n).any(|z| lt(x, z) && lt(z, y)) {
                    out.push(Arrow::new(x, y));
                }
            }
        }
        out
    }

    pub fn subspace<I>(&self, carrier: I) -> Result<SubSpace<'_>>
    where
        I: IntoIterator<Item = usize>,
    {
        SubSpace::new(self, carrier)
    }

    pub fn subspace_by_labels<I, S>(&self, labels: I) -> Result<SubSpace<'_>>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        SubSpace::new(self, self.point_set(labels)?)
    }
}

/// Result of [`FiniteSpace::kolmogorov_quotient`].
#[derive(Clone, Debug)]
pub struct KolmogorovQuotient {
    /// The T0 quotient space.
    pub space: FiniteSpace,
    /// The quotient map `X -> X0`.
    pub quotient: PointMap,
    /// A section `X0 -> X` picking the least member of each class.
    pub section: PointMap,
    /// Members of each class, indexed like the quotient's points.
    pub classes: Vec<Vec<usize>>,
}

/// A function between the point sets of two spaces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointMap {
    source: FiniteSpace,
    target: FiniteSpace,
    assignment: Vec<usize>,
}

impl PointMap {
    pub fn new(source: FiniteSpace, target: FiniteSpace, assignment: Vec<usize>) -> Result<Self> {
        if assignment.len() != source.len() {
            return Err(Error::MapNotTotal {
                expected: source.len(),
                got: assignment.len(),
            });
        }
        for &y in &assignment {
            target.check_point(y)?;
        }
        Ok(PointMap {
            source,
            target,
            assignment,
        })
    }

    /// Map given as `source label -> target label` pairs.
    pub fn from_labels<I, A, B>(source: FiniteSpace, target: FiniteSpace, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (A, B)>,
        A: AsRef<str>,
        B: AsRef<str>,
    {
        let mut assignment = vec![usize::MAX; source.len()];
        for (a, b) in pairs {
            assignment[source.index_of(a.as_ref())?] = target.index_of(b.as_ref())?;
        }
        if let Some(x) = assignment.iter().position(|&y| y == usize::MAX) {
            return Err(Error::MissingImage(source.label(x).to_string()));
        }
        Self::new(source, target, assignment)
    }

    pub fn identity(space: &FiniteSpace) -> Self {
        PointMap {
            source: space.clone(),
            target: space.clone(),
            assignment: space.points().collect(),
        }
    }

    pub fn source(&self) -> &FiniteSpace {
        &self.source
    }

    pub fn target(&self) -> &FiniteSpace {
        &self.target
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn apply(&self, x: usize) -> usize {
        self.assignment[x]
    }

    /// Continuity is order preservation.
    pub fn is_continuous(&self) -> bool {
        self.source.comparabilities().into_iter().all(|a| {
            self.target
                .leq(self.assignment[a.src], self.assignment[a.dst])
        })
    }

    pub fn preimage(&self, s: &PointSet) -> PointSet {
        self.source
            .points()
            .filter(|&x| s.contains(&self.assignment[x]))
            .collect()
    }

    pub fn image(&self, s: &PointSet) -> PointSet {
        s.iter().map(|&x| self.assignment[x]).collect()
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &PointMap) -> Result<PointMap> {
        if self.target != other.source {
            return Err(Error::SpaceMismatch);
        }
        Ok(PointMap {
            source: self.source.clone(),
            target: other.target.clone(),
            assignment: self
                .assignment
                .iter()
                .map(|&y| other.assignment[y])
                .collect(),
        })
    }

    pub fn is_bijective(&self) -> bool {
        self.source.len() == self.target.len()
            && self.assignment.iter().collect::<BTreeSet<_>>().len() == self.target.len()
    }

    /// Bijective, continuous, and with continuous inverse.
    pub fn is_homeomorphism(&self) -> bool {
        if !self.is_bijective() || !self.is_continuous() {
            return false;
        }
        self.source.points().all(|x| {
            self.source
                .points()
                .all(|y| self.source.leq(x, y) == self.target.leq(self.apply(x), self.apply(y)))
        })
    }
}

/// A non-empty subset of a space with the induced order.
#[derive(Clone, Debug)]
pub struct SubSpace<'a> {
    parent: &'a FiniteSpace,
    carrier: PointSet,
}

impl<'a> SubSpace<'a> {
    pub fn new<I>(parent: &'a FiniteSpace, carrier: I) -> Result<Self>
    where
        I: IntoIterator<Item = usize>,
    {
        let carrier: PointSet = carrier.into_iter().collect();
        if carrier.is_empty() {
            return Err(Error::EmptySubspace);
        }
        for &x in &carrier {
            parent.check_point(x)?;
        }
        Ok(SubSpace { parent, carrier })
    }

    pub fn full(parent: &'a FiniteSpace) -> Self {
        SubSpace {
            parent,
            carrier: parent.points().collect(),
        }
    }

    pub fn parent(&self) -> &'a FiniteSpace {
        self.parent
    }

    pub fn carrier(&self) -> &PointSet {
        &self.carrier
    }

    pub fn contains(&self, x: usize) -> bool {
        self.carrier.contains(&x)
    }

    /// Arrows of the parent with both ends in the carrier.
    pub fn comparabilities(&self) -> Vec<Arrow> {
        self.parent
            .comparabilities()
            .into_iter()
            .filter(|a| self.contains(a.src) && self.contains(a.dst))
            .collect()
    }

    /// The induced space, with points in parent order, and the parent index
    /// of each of its points.
    pub fn to_space(&self) -> (FiniteSpace, Vec<usize>) {
        let members: Vec<usize> = self.carrier.iter().copied().collect();
        let labels = members
            .iter()
            .map(|&x| self.parent.label(x).to_string())
            .collect();
        let leq = members
            .iter()
            .map(|&x| members.iter().map(|&y| self.parent.leq(x, y)).collect())
            .collect();
        let space = FiniteSpace::from_matrix(labels, leq).expect("restriction of a preorder");
        (space, members)
    }

    /// The inclusion map into the parent.
    pub fn inclusion(&self) -> PointMap {
        let (space, members) = self.to_space();
        PointMap {
            source: space,
            target: self.parent.clone(),
            assignment: members,
        }
    }

    /// Components of the induced space, in parent indices.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let (space, members) = self.to_space();
        space
            .connected_components()
            .into_iter()
            .map(|c| c.into_iter().map(|i| members[i]).collect())
            .collect()
    }
}
