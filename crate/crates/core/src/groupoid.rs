//! Path words, maximal trees and fundamental-group presentations.
//!
//! A finite preorder is a thin category. Freely inverting its arrows gives a
//! groupoid whose morphisms are path words over forward steps `x <= y` and
//! formal inverse steps, modulo composition (`(x<=y, y<=z) ~ (x<=z)`),
//! identities and cancellation of `f` against its inverse. Collapsing a
//! maximal tree `T` turns that groupoid into a group isomorphic to
//! `π₁(X, x0)`:
//!
//! * generators are the comparabilities outside `T`,
//! * every composable pair `x <= y <= z` gives the relator
//!   `g(x<=z)^-1 · g(y<=z) · g(x<=y)`, with tree letters and identities
//!   deleted.
//!
//! Words over generators are written in composition order: the letter for
//! the last step of a path comes first, so the word of `(x<=y, y<=z)` is
//! `g(y<=z) · g(x<=y)`. This matches how a functor into a group composes
//! and how [`crate::group::GroupHom::evaluate`] multiplies.
//!
//! No word problem is solved here. Words are only compared after
//! abelianization or after evaluation into a finite group.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use crate::complex::{smith_normal_form, HomologyGroup, IntMatrix};
use crate::error::{Error, Result};
use crate::space::{Arrow, FiniteSpace};
use crate::union_find::DisjointSets;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    Forward,
    Inverse,
}

/// One step of a path: an arrow traversed forward (`x -> y` for `x <= y`)
/// or backward along its formal inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Step {
    pub arrow: Arrow,
    pub direction: Direction,
}

impl Step {
    pub fn forward(arrow: Arrow) -> Self {
        Step {
            arrow,
            direction: Direction::Forward,
        }
    }

    pub fn inverse(arrow: Arrow) -> Self {
        Step {
            arrow,
            direction: Direction::Inverse,
        }
    }

    pub fn source(&self) -> usize {
        match self.direction {
            Direction::Forward => self.arrow.src,
            Direction::Inverse => self.arrow.dst,
        }
    }

    pub fn target(&self) -> usize {
        match self.direction {
            Direction::Forward => self.arrow.dst,
            Direction::Inverse => self.arrow.src,
        }
    }

    pub fn reversed(&self) -> Self {
        Step {
            arrow: self.arrow,
            direction: match self.direction {
                Direction::Forward => Direction::Inverse,
                Direction::Inverse => Direction::Forward,
            },
        }
    }
}

/// A composable sequence of steps starting at `start`. The empty word is the
/// identity at `start`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathWord {
    start: usize,
    steps: Vec<Step>,
}

impl PathWord {
    pub fn new(space: &FiniteSpace, start: usize, steps: Vec<Step>) -> Result<Self> {
        space.check_point(start)?;
        let mut at = start;
        for (i, s) in steps.iter().enumerate() {
            if !space.is_arrow(s.arrow) || s.source() != at {
                return Err(Error::MalformedWord(i));
            }
            at = s.target();
        }
        Ok(PathWord { start, steps })
    }

    pub fn empty(start: usize) -> Self {
        PathWord {
            start,
            steps: Vec::new(),
        }
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn end(&self) -> usize {
        self.steps.last().map_or(self.start, Step::target)
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn is_loop(&self) -> bool {
        self.start == self.end()
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &PathWord) -> Result<PathWord> {
        if self.end() != next.start {
            return Err(Error::MalformedWord(self.steps.len()));
        }
        let mut steps = self.steps.clone();
        steps.extend_from_slice(&next.steps);
        Ok(PathWord {
            start: self.start,
            steps,
        })
    }

    /// The same path walked backwards.
    pub fn reversed(&self) -> PathWord {
        PathWord {
            start: self.end(),
            steps: self.steps.iter().rev().map(Step::reversed).collect(),
        }
    }

    pub fn display(&self, space: &FiniteSpace) -> String {
        if self.steps.is_empty() {
            return format!("()_{}", space.label(self.start));
        }
        let parts: Vec<String> = self
            .steps
            .iter()
            .map(|s| match s.direction {
                Direction::Forward => {
                    format!("{}<={}", space.label(s.arrow.src), space.label(s.arrow.dst))
                }
                Direction::Inverse => {
                    format!("{}>={}", space.label(s.arrow.dst), space.label(s.arrow.src))
                }
            })
            .collect();
        format!("({})", parts.join(", "))
    }
}

/// Generating edges of a maximal tree (a spanning forest when the space is
/// disconnected): per component, the undirected graph of the edges is
/// acyclic and connected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpanningTree {
    space: FiniteSpace,
    edges: BTreeSet<Arrow>,
}

impl SpanningTree {
    /// Validates that `edges` form a spanning tree of every component.
    pub fn from_edges<I>(space: &FiniteSpace, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = Arrow>,
    {
        let edges: BTreeSet<Arrow> = edges.into_iter().collect();
        let mut sets = forest_sets(space, &edges)?;
        for a in space.comparabilities() {
            if !sets.same(a.src, a.dst) {
                return Err(Error::TreeNotSpanning(
                    space.label(a.src).into(),
                    space.label(a.dst).into(),
                ));
            }
        }
        Ok(SpanningTree {
            space: space.clone(),
            edges,
        })
    }

    pub fn space(&self) -> &FiniteSpace {
        &self.space
    }

    pub fn edges(&self) -> &BTreeSet<Arrow> {
        &self.edges
    }

    pub fn contains(&self, a: Arrow) -> bool {
        self.edges.contains(&a)
    }

    /// Tree edges with both ends in `carrier`.
    pub fn restricted_to(&self, carrier: &BTreeSet<usize>) -> BTreeSet<Arrow> {
        self.edges
            .iter()
            .copied()
            .filter(|a| carrier.contains(&a.src) && carrier.contains(&a.dst))
            .collect()
    }

    /// Edge list as `a<c, b<c, ...`.
    pub fn display(&self) -> String {
        let parts: Vec<String> = self
            .edges
            .iter()
            .map(|&a| self.space.arrow_label(a))
            .collect();
        parts.join(", ")
    }

    fn neighbours(&self) -> Vec<Vec<(usize, Step)>> {
        let mut adj = vec![Vec::new(); self.space.len()];
        for &a in &self.edges {
            adj[a.src].push((a.dst, Step::forward(a)));
            adj[a.dst].push((a.src, Step::inverse(a)));
        }
        adj
    }
}

/// Union-find over the undirected forest graph; errors on a cycle or on a
/// non-comparability.
fn forest_sets(space: &FiniteSpace, edges: &BTreeSet<Arrow>) -> Result<DisjointSets> {
    let mut sets = DisjointSets::new(space.len());
    for &a in edges {
        if !space.is_arrow(a) {
            return Err(Error::NotAComparability(format!("{}->{}", a.src, a.dst)));
        }
        if !sets.union(a.src, a.dst) {
            return Err(Error::ForestHasCycle(space.label(a.src).into()));
        }
    }
    Ok(sets)
}

/// Extends an acyclic edge set to a maximal tree by scanning the remaining
/// comparabilities in canonical order and keeping each one that joins two
/// different partial components.
pub fn extend_forest_to_tree<I>(space: &FiniteSpace, forest: I) -> Result<SpanningTree>
where
    I: IntoIterator<Item = Arrow>,
{
    let mut edges: BTreeSet<Arrow> = forest.into_iter().collect();
    let mut sets = forest_sets(space, &edges)?;
    for a in space.comparabilities() {
        if sets.union(a.src, a.dst) {
            edges.insert(a);
        }
    }
    Ok(SpanningTree {
        space: space.clone(),
        edges,
    })
}

/// Every maximal tree of `space`, or `None` if there are more than `limit`.
pub fn spanning_trees(space: &FiniteSpace, limit: usize) -> Option<Vec<SpanningTree>> {
    let arrows = space.comparabilities();
    let needed = space.len() - space.connected_components().len();
    let mut out = Vec::new();
    let mut chosen = Vec::new();

    #[allow(clippy::too_many_arguments)]
    fn rec(
        arrows: &[Arrow],
        i: usize,
        needed: usize,
        chosen: &mut Vec<Arrow>,
        sets: &DisjointSets,
        space: &FiniteSpace,
        out: &mut Vec<SpanningTree>,
        limit: usize,
    ) -> bool {
        if chosen.len() == needed {
            if out.len() == limit {
                return false;
            }
            out.push(SpanningTree {
                space: space.clone(),
                edges: chosen.iter().copied().collect(),
            });
            return true;
        }
        if arrows.len() - i < needed - chosen.len() {
            return true;
        }
        let a = arrows[i];
        let mut with = sets.clone();
        if with.union(a.src, a.dst) {
            chosen.push(a);
            let ok = rec(arrows, i + 1, needed, chosen, &with, space, out, limit);
            chosen.pop();
            if !ok {
                return false;
            }
        }
        rec(arrows, i + 1, needed, chosen, sets, space, out, limit)
    }

    let sets = DisjointSets::new(space.len());
    rec(
        &arrows,
        0,
        needed,
        &mut chosen,
        &sets,
        space,
        &mut out,
        limit,
    )
    .then_some(out)
}

/// The unique simple path from `a` to `b` inside the tree.
pub fn tree_path(tree: &SpanningTree, a: usize, b: usize) -> Result<PathWord> {
    let space = &tree.space;
    space.check_point(a)?;
    space.check_point(b)?;
    let adj = tree.neighbours();
    let mut via: Vec<Option<(usize, Step)>> = vec![None; space.len()];
    let mut seen = vec![false; space.len()];
    seen[a] = true;
    let mut queue = VecDeque::from([a]);
    while let Some(u) = queue.pop_front() {
        if u == b {
            break;
        }
        for &(v, step) in &adj[u] {
            if !seen[v] {
                seen[v] = true;
                via[v] = Some((u, step));
                queue.push_back(v);
            }
        }
    }
    if !seen[b] {
        return Err(Error::DifferentComponents(
            space.label(a).into(),
            space.label(b).into(),
        ));
    }
    let mut steps = Vec::new();
    let mut at = b;
    while let Some((prev, step)) = via[at] {
        steps.push(step);
        at = prev;
    }
    steps.reverse();
    Ok(PathWord { start: a, steps })
}

/// Conjugates a loop at `a` into a loop at `x0` along tree paths:
/// `tree_path(x0, a) · w · tree_path(a, x0)`.
pub fn basepoint_transport(
    tree: &SpanningTree,
    a: usize,
    x0: usize,
    w: &PathWord,
) -> Result<PathWord> {
    if w.start != a || !w.is_loop() {
        return Err(Error::MalformedWord(0));
    }
    let there = tree_path(tree, x0, a)?;
    let back = tree_path(tree, a, x0)?;
    there.then(w)?.then(&back)
}

/// A generator letter `g(arrow)` or its inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub arrow: Arrow,
    pub inverse: bool,
}

impl Letter {
    pub fn new(arrow: Arrow) -> Self {
        Letter {
            arrow,
            inverse: false,
        }
    }

    pub fn inv(arrow: Arrow) -> Self {
        Letter {
            arrow,
            inverse: true,
        }
    }

    pub fn inverted(self) -> Self {
        Letter {
            arrow: self.arrow,
            inverse: !self.inverse,
        }
    }
}

/// A word over generator letters, in composition order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Cancels adjacent `g g^-1` pairs until none remain.
    pub fn freely_reduced(&self) -> Word {
        let mut out: Vec<Letter> = Vec::with_capacity(self.0.len());
        for &l in &self.0 {
            if out.last() == Some(&l.inverted()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word(out)
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inverted()).collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// `g[a<d]^-1*g[b<d]`, or `1` for the empty word.
    pub fn display(&self, space: &FiniteSpace) -> String {
        if self.0.is_empty() {
            return "1".to_string();
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|l| {
                let g = generator_name(space, l.arrow);
                if l.inverse {
                    format!("{g}^-1")
                } else {
                    g
                }
            })
            .collect();
        parts.join("*")
    }
}

/// `g[x<y]`.
pub fn generator_name(space: &FiniteSpace, a: Arrow) -> String {
    format!("g[{}]", space.arrow_label(a))
}

/// Deletes tree steps, writes the rest as generator letters in composition
/// order and freely reduces. Triangle relators are not applied.
pub fn reduce_word(tree: &SpanningTree, w: &PathWord) -> Result<Word> {
    PathWord::new(&tree.space, w.start, w.steps.clone())?;
    let letters: Vec<Letter> = w
        .steps
        .iter()
        .rev()
        .filter(|s| !tree.contains(s.arrow))
        .map(|s| match s.direction {
            Direction::Forward => Letter::new(s.arrow),
            Direction::Inverse => Letter::inv(s.arrow),
        })
        .collect();
    Ok(Word(letters).freely_reduced())
}

/// Finite presentation of `π₁(X, x0)` relative to a maximal tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    space: FiniteSpace,
    basepoint: usize,
    tree_edges: BTreeSet<Arrow>,
    generators: Vec<Arrow>,
    relators: Vec<Word>,
}

impl Presentation {
    pub fn space(&self) -> &FiniteSpace {
        &self.space
    }

    pub fn basepoint(&self) -> usize {
        self.basepoint
    }

    pub fn generators(&self) -> &[Arrow] {
        &self.generators
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    /// Edges of the tree the presentation was built from.
    pub fn tree_edges(&self) -> &BTreeSet<Arrow> {
        &self.tree_edges
    }

    pub fn generator_index(&self, a: Arrow) -> Option<usize> {
        self.generators.binary_search(&a).ok()
    }

    pub fn generator_names(&self) -> Vec<String> {
        self.generators
            .iter()
            .map(|&a| generator_name(&self.space, a))
            .collect()
    }

    /// Resolves `g[x<y]` (or bare `x<y`) to a generator arrow.
    pub fn parse_generator(&self, name: &str) -> Result<Arrow> {
        let inner = name
            .trim()
            .strip_prefix("g[")
            .and_then(|s| s.strip_suffix(']'))
            .unwrap_or(name.trim());
        let (lo, hi) = inner
            .split_once('<')
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))?;
        let a = self
            .space
            .arrow(lo.trim(), hi.trim())
            .map_err(|_| Error::UnknownGenerator(name.to_string()))?;
        self.generator_index(a)
            .map(|_| a)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    /// Relators as 1-based signed generator indices.
    pub fn relator_indices(&self) -> Vec<Vec<i64>> {
        self.relators
            .iter()
            .map(|r| {
                r.letters()
                    .iter()
                    .map(|l| {
                        let i = self
                            .generator_index(l.arrow)
                            .expect("relator letter is a generator")
                            as i64
                            + 1;
                        if l.inverse {
                            -i
                        } else {
                            i
                        }
                    })
                    .collect()
            })
            .collect()
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rels: Vec<String> = self
            .relators
            .iter()
            .map(|r| r.display(&self.space))
            .collect();
        write!(
            f,
            "<{} | {}>",
            self.generator_names().join(", "),
            rels.join(", ")
        )
    }
}

/// Presentation of `π₁(X, x0)` from a maximal tree.
pub fn pi1_presentation(
    space: &FiniteSpace,
    x0: usize,
    tree: &SpanningTree,
) -> Result<Presentation> {
    space.check_point(x0)?;
    let comps = space.connected_components().len();
    if comps != 1 {
        return Err(Error::Disconnected(comps));
    }
    if tree.space != *space {
        return Err(Error::SpaceMismatch);
    }
    let arrows = space.comparabilities();
    let generators: Vec<Arrow> = arrows
        .iter()
        .copied()
        .filter(|a| !tree.contains(*a))
        .collect();
    let letter = |a: Arrow, inverse: bool| -> Option<Letter> {
        if a.src == a.dst || tree.contains(a) {
            None
        } else {
            Some(Letter { arrow: a, inverse })
        }
    };
    let mut by_src: BTreeMap<usize, Vec<Arrow>> = BTreeMap::new();
    for &a in &arrows {
        by_src.entry(a.src).or_default().push(a);
    }
    let mut relators = Vec::new();
    for &first in &arrows {
        for &second in by_src.get(&first.dst).map_or(&[][..], Vec::as_slice) {
            let composite = Arrow::new(first.src, second.dst);
            let word: Vec<Letter> = [
                letter(composite, true),
                letter(second, false),
                letter(first, false),
            ]
            .into_iter()
            .flatten()
            .collect();
            let word = Word(word).freely_reduced();
            if !word.is_empty() {
                relators.push(word);
            }
        }
    }
    Ok(Presentation {
        space: space.clone(),
        basepoint: x0,
        tree_edges: tree.edges.clone(),
        generators,
        relators,
    })
}

/// Relator exponent-sum matrix: one row per relator, one column per
/// generator.
pub fn relation_matrix(p: &Presentation) -> IntMatrix {
    let mut m = IntMatrix::zeros(p.relators.len(), p.generators.len());
    for (i, r) in p.relators.iter().enumerate() {
        for l in r.letters() {
            let j = p
                .generator_index(l.arrow)
                .expect("relator letter is a generator");
            m[(i, j)] += if l.inverse { -1 } else { 1 };
        }
    }
    m
}

/// The abelianization of the presented group, via Smith normal form of the
/// relator exponent matrix.
pub fn abelianization(p: &Presentation) -> HomologyGroup {
    let form = smith_normal_form(&relation_matrix(p));
    HomologyGroup::from_invariant_factors(p.generators.len(), &form)
}
