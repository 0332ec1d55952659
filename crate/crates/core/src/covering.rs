//! Group-valued functors on a finite space and the regular coverings they
//! define.
//!
//! A functor `F: X -> G` into a group (viewed as a one-object category)
//! assigns an element to every comparability, compatibly with composition:
//! `F(x<=z) = F(y<=z) · F(x<=y)`. The comma space `F ↓ *` has points
//! `X × G` and order
//!
//! ```text
//! (x, g) <= (x', g')  iff  x <= x'  and  g = g' · F(x <= x')
//! ```
//!
//! and its first projection is a regular covering with deck group `G`
//! acting by left translation. For `F = F_{T,α}` (tree edges sent to the
//! identity, every other comparability to the α-image of its generator) the
//! covering corresponds to `ker α` and has `[G : im α]` components.
//!
//! The identification `p_*(π₁(X̃)) = ker F_*` is not checked by computing
//! fundamental groups of the total space; instead the checks here cover the
//! sheet count, the component count, regularity of the deck action, and
//! (through the homology oracle) `H_1` of the components.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GroupHom};
use crate::groupoid::{
    basepoint_transport, extend_forest_to_tree, pi1_presentation, reduce_word, spanning_trees,
    tree_path, Direction, PathWord, SpanningTree, Step,
};
use crate::space::{Arrow, FiniteSpace, PointMap, PointSet, SubSpace};

/// A functor from a finite space into a finite group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupFunctor {
    space: FiniteSpace,
    group: FiniteGroup,
    /// `values[x][y]` is `F(x <= y)` when `x <= y`.
    values: Vec<Vec<Option<usize>>>,
}

impl GroupFunctor {
    /// Builds a functor from its values on every comparability; checks
    /// functoriality on all composable pairs.
    pub fn new(
        space: &FiniteSpace,
        group: &FiniteGroup,
        values: &BTreeMap<Arrow, usize>,
    ) -> Result<Self> {
        let n = space.len();
        let mut table = vec![vec![None; n]; n];
        for (x, row) in table.iter_mut().enumerate() {
            row[x] = Some(group.identity());
        }
        for a in space.comparabilities() {
            let v = *values
                .get(&a)
                .ok_or_else(|| Error::MissingImage(space.arrow_label(a)))?;
            if v >= group.order() {
                return Err(Error::UnknownElement(v.to_string()));
            }
            table[a.src][a.dst] = Some(v);
        }
        if let Some(a) = values.keys().find(|a| !space.is_arrow(**a)) {
            return Err(Error::NotAComparability(format!("{}->{}", a.src, a.dst)));
        }
        let f = GroupFunctor {
            space: space.clone(),
            group: group.clone(),
            values: table,
        };
        f.check_functoriality()?;
        Ok(f)
    }

    /// The functor sending everything to the identity.
    pub fn constant(space: &FiniteSpace, group: &FiniteGroup) -> Self {
        let values = space
            .comparabilities()
            .into_iter()
            .map(|a| (a, group.identity()))
            .collect();
        Self::new(space, group, &values).expect("constant functor is functorial")
    }

    pub fn space(&self) -> &FiniteSpace {
        &self.space
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    /// `F(x <= y)`, or `None` when `x` is not below `y`.
    pub fn value_leq(&self, x: usize, y: usize) -> Option<usize> {
        self.values[x][y]
    }

    /// `F(a)`; panics if `a` is not a comparability.
    pub fn value(&self, a: Arrow) -> usize {
        self.values[a.src][a.dst].expect("arrow of the space")
    }

    /// Values on every comparability, in canonical order.
    pub fn values(&self) -> BTreeMap<Arrow, usize> {
        self.space
            .comparabilities()
            .into_iter()
            .map(|a| (a, self.value(a)))
            .collect()
    }

    /// Checks `F(x<=z) = F(y<=z) · F(x<=y)` for every `x <= y <= z`.
    pub fn check_functoriality(&self) -> Result<()> {
        let n = self.space.len();
        for x in 0..n {
            for y in 0..n {
                let Some(fxy) = self.values[x][y] else {
                    continue;
                };
                for z in 0..n {
                    let Some(fyz) = self.values[y][z] else {
                        continue;
                    };
                    let fxz = self.values[x][z].expect("transitivity");
                    if fxz != self.group.op(fyz, fxy) {
                        return Err(Error::NotFunctorial(
                            self.space.label(x).into(),
                            self.space.label(y).into(),
                            self.space.label(z).into(),
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_constant_identity(&self) -> bool {
        self.space
            .comparabilities()
            .into_iter()
            .all(|a| self.value(a) == self.group.identity())
    }

    /// Image of a path: step values multiplied in composition order (the
    /// last step leftmost), inverse steps contributing inverses.
    pub fn evaluate_path(&self, w: &PathWord) -> usize {
        w.steps().iter().fold(self.group.identity(), |acc, s| {
            let v = self.value(s.arrow);
            let v = match s.direction {
                Direction::Forward => v,
                Direction::Inverse => self.group.inv(v),
            };
            self.group.op(v, acc)
        })
    }
}

/// `F_{T,α}`: identity on tree edges, `α(g_e)` on every other comparability.
pub fn functor_from_tree_hom(tree: &SpanningTree, h: &GroupHom) -> Result<GroupFunctor> {
    let p = h.domain();
    if tree.space() != p.space() || tree.edges() != p.tree_edges() {
        return Err(Error::SpaceMismatch);
    }
    let g = h.codomain();
    let values: BTreeMap<Arrow, usize> = p
        .space()
        .comparabilities()
        .into_iter()
        .map(|a| {
            let v = if tree.contains(a) {
                g.identity()
            } else {
                h.image_of(a).expect("hom is total on generators")
            };
            (a, v)
        })
        .collect();
    GroupFunctor::new(p.space(), g, &values).map_err(|e| match e {
        Error::NotFunctorial(x, y, z) => Error::Invariant(format!(
            "validated hom produced a non-functor on {x} <= {y} <= {z}"
        )),
        other => other,
    })
}

/// Re-expresses a functor relative to another maximal tree: the result sends
/// the new tree's edges to the identity and takes the same values as `f` on
/// loops at `x0`. Applied to `F_{T,α}` this gives `F_{T',α}`.
pub fn retree_functor(
    f: &GroupFunctor,
    new_tree: &SpanningTree,
    x0: usize,
) -> Result<GroupFunctor> {
    let space = &f.space;
    if new_tree.space() != space {
        return Err(Error::SpaceMismatch);
    }
    let comps = space.connected_components().len();
    if comps != 1 {
        return Err(Error::Disconnected(comps));
    }
    let g = &f.group;
    // k(x) = F(tree path x0 -> x)
    let k: Vec<usize> = space
        .points()
        .map(|x| tree_path(new_tree, x0, x).map(|w| f.evaluate_path(&w)))
        .collect::<Result<_>>()?;
    let values = space
        .comparabilities()
        .into_iter()
        .map(|a| (a, g.op(g.inv(k[a.dst]), g.op(f.value(a), k[a.src]))))
        .collect();
    GroupFunctor::new(space, g, &values)
}

/// `F_{T',α}` for the hom `h` (defined relative to its own tree).
pub fn functor_for_tree(
    h: &GroupHom,
    original: &SpanningTree,
    new_tree: &SpanningTree,
) -> Result<GroupFunctor> {
    let f = functor_from_tree_hom(original, h)?;
    retree_functor(&f, new_tree, h.domain().basepoint())
}

/// True iff `F` sends every comparability inside `A` to the identity.
pub fn is_trivial_on(f: &GroupFunctor, a: &SubSpace<'_>) -> bool {
    a.comparabilities()
        .into_iter()
        .all(|arr| f.value(arr) == f.group.identity())
}

/// Decides triviality of `F_{T,α}` on `A` through fundamental groups: for one
/// basepoint `a` per component of `A`, every generator loop of `π₁(A, a)`
/// (relative to `T ∩ A`) is pushed into `X`, moved to the basepoint along
/// the tree, and must lie in `ker α`.
///
/// Requires `T` to restrict to a maximal tree on each component of `A`.
pub fn triviality_criterion(tree: &SpanningTree, h: &GroupHom, a: &SubSpace<'_>) -> Result<bool> {
    let p = h.domain();
    let x = p.space();
    if tree.space() != x || tree.edges() != p.tree_edges() || a.parent() != x {
        return Err(Error::SpaceMismatch);
    }
    let x0 = p.basepoint();
    let identity = h.codomain().identity();
    for comp in a.components() {
        let carrier: PointSet = comp.iter().copied().collect();
        let sub = SubSpace::new(x, carrier.iter().copied())?;
        let (sub_space, members) = sub.to_space();
        let local = |i: usize| members.binary_search(&i).expect("member");
        let restricted = tree.restricted_to(&carrier);
        let sub_tree = SpanningTree::from_edges(
            &sub_space,
            restricted
                .iter()
                .map(|e| Arrow::new(local(e.src), local(e.dst))),
        )
        .map_err(|_| Error::TreeRestrictionFails(x.label(comp[0]).into()))?;
        let base = 0;
        let pres = pi1_presentation(&sub_space, base, &sub_tree)?;
        for &gen in pres.generators() {
            let there = tree_path(&sub_tree, base, gen.src)?;
            let back = tree_path(&sub_tree, gen.dst, base)?;
            let lp = there
                .then(&PathWord::new(
                    &sub_space,
                    gen.src,
                    vec![Step::forward(gen)],
                )?)?
                .then(&back)?;
            let steps = lp
                .steps()
                .iter()
                .map(|s| Step {
                    arrow: Arrow::new(members[s.arrow.src], members[s.arrow.dst]),
                    direction: s.direction,
                })
                .collect();
            let in_x = PathWord::new(x, members[base], steps)?;
            let at_x0 = basepoint_transport(tree, members[base], x0, &in_x)?;
            let word = reduce_word(tree, &at_x0)?;
            if h.evaluate(&word)? != identity {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Outcome of a search for a maximal tree trivializing a functor on a
/// subspace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TreeSearch {
    Found(SpanningTree),
    NoneExists,
    /// The enumeration was too large to finish.
    Unknown,
}

/// Largest space on which [`find_trivializing_tree_exhaustive`] enumerates.
pub const TREE_ENUMERATION_MAX_POINTS: usize = 10;

/// Looks for a maximal tree `T'` with `F_{T',α}` trivial on `A`.
///
/// Picks a maximal tree in each component of `A`, extends that forest to a
/// maximal tree `T'` of `X` and tests it. This is decisive: changing the
/// tree conjugates `α θ_a i_*` by a group element, so if some tree
/// trivializes `A` then every tree extending such a forest does.
pub fn find_trivializing_tree(
    h: &GroupHom,
    tree: &SpanningTree,
    a: &SubSpace<'_>,
) -> Result<Option<SpanningTree>> {
    let x = h.domain().space();
    if a.parent() != x {
        return Err(Error::SpaceMismatch);
    }
    let mut forest = Vec::new();
    for comp in a.components() {
        let sub = SubSpace::new(x, comp.iter().copied())?;
        let (sub_space, members) = sub.to_space();
        let local_tree = extend_forest_to_tree(&sub_space, [])?;
        forest.extend(
            local_tree
                .edges()
                .iter()
                .map(|e| Arrow::new(members[e.src], members[e.dst])),
        );
    }
    let candidate = extend_forest_to_tree(x, forest)?;
    let f = functor_for_tree(h, tree, &candidate)?;
    Ok(is_trivial_on(&f, a).then_some(candidate))
}

/// The same search by brute force over every maximal tree. Gives up with
/// [`TreeSearch::Unknown`] above [`TREE_ENUMERATION_MAX_POINTS`] points or
/// past `limit` trees.
pub fn find_trivializing_tree_exhaustive(
    h: &GroupHom,
    tree: &SpanningTree,
    a: &SubSpace<'_>,
    limit: usize,
) -> Result<TreeSearch> {
    let x = h.domain().space();
    if x.len() > TREE_ENUMERATION_MAX_POINTS {
        return Ok(TreeSearch::Unknown);
    }
    let Some(trees) = spanning_trees(x, limit) else {
        return Ok(TreeSearch::Unknown);
    };
    for t in trees {
        let f = functor_for_tree(h, tree, &t)?;
        if is_trivial_on(&f, a) {
            return Ok(TreeSearch::Found(t));
        }
    }
    Ok(TreeSearch::NoneExists)
}

/// The comma space `F ↓ *` over `X` with its projection.
///
/// Point `(x, g)` has index `x * |G| + g` and label `(x,g)`.
#[derive(Clone, Debug)]
pub struct Covering {
    functor: GroupFunctor,
    total: FiniteSpace,
    projection: PointMap,
}

fn product_labels(base: &FiniteSpace, g: &FiniteGroup) -> Vec<String> {
    base.points()
        .flat_map(|x| g.elements().map(move |e| (x, e)))
        .map(|(x, e)| format!("({},{})", base.label(x), g.label(e)))
        .collect()
}

/// Builds `F ↓ *`. Transitivity of the comma order follows from
/// functoriality and is asserted, never re-closed.
pub fn comma_cover(f: &GroupFunctor) -> Covering {
    let g = &f.group;
    let base = &f.space;
    let k = g.order();
    let n = base.len() * k;
    let mut leq = vec![vec![false; n]; n];
    for x in base.points() {
        for y in base.points() {
            let Some(fxy) = f.values[x][y] else { continue };
            for gy in g.elements() {
                let gx = g.op(gy, fxy);
                leq[x * k + gx][y * k + gy] = true;
            }
        }
    }
    let total = FiniteSpace::from_matrix(product_labels(base, g), leq)
        .expect("comma order of a functor is a preorder");
    Covering::assemble(f.clone(), total)
}

impl Covering {
    fn assemble(functor: GroupFunctor, total: FiniteSpace) -> Self {
        let k = functor.group.order();
        let projection = PointMap::new(
            total.clone(),
            functor.space.clone(),
            total.points().map(|p| p / k).collect(),
        )
        .expect("projection is total");
        Covering {
            functor,
            total,
            projection,
        }
    }

    /// Pairs a functor with an arbitrary preorder on `X × G` (same indexing
    /// as [`comma_cover`]). Nothing is checked beyond the point count; use
    /// [`verify_covering`] to test it.
    pub fn from_total_order(functor: GroupFunctor, total: FiniteSpace) -> Result<Self> {
        let expected = functor.space.len() * functor.group.order();
        if total.len() != expected {
            return Err(Error::MapNotTotal {
                expected,
                got: total.len(),
            });
        }
        Ok(Self::assemble(functor, total))
    }

    pub fn functor(&self) -> &GroupFunctor {
        &self.functor
    }

    pub fn total(&self) -> &FiniteSpace {
        &self.total
    }

    pub fn base(&self) -> &FiniteSpace {
        &self.functor.space
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.functor.group
    }

    pub fn projection(&self) -> &PointMap {
        &self.projection
    }

    /// Index of `(x, g)`.
    pub fn point(&self, x: usize, g: usize) -> usize {
        x * self.group().order() + g
    }

    /// `(x, g)` of a total-space index.
    pub fn coordinates(&self, p: usize) -> (usize, usize) {
        let k = self.group().order();
        (p / k, p % k)
    }

    /// The fiber `p⁻¹(x) = {x} × G`.
    pub fn fiber(&self, x: usize) -> Vec<usize> {
        self.group().elements().map(|g| self.point(x, g)).collect()
    }

    /// `(x0, e)`.
    pub fn basepoint_lift(&self, x0: usize) -> usize {
        self.point(x0, self.group().identity())
    }
}

/// The three local-triviality conditions checked at each base point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Condition {
    /// `p⁻¹(U_x)` is the union of the `U_(x,g)`.
    Union,
    /// The `U_(x,g)` are mutually disjoint.
    Disjoint,
    /// `p` maps each `U_(x,g)` homeomorphically onto `U_x`.
    Homeomorphic,
}

impl Condition {
    pub const ALL: [Condition; 3] = [
        Condition::Union,
        Condition::Disjoint,
        Condition::Homeomorphic,
    ];

    pub fn number(self) -> usize {
        match self {
            Condition::Union => 1,
            Condition::Disjoint => 2,
            Condition::Homeomorphic => 3,
        }
    }

    pub fn describe(self) -> &'static str {
        match self {
            Condition::Union => "p^-1(U_x) is the union of the U_(x,g)",
            Condition::Disjoint => "the U_(x,g) are mutually disjoint",
            Condition::Homeomorphic => "p maps each U_(x,g) homeomorphically onto U_x",
        }
    }
}

/// A failed condition with a witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub condition: Condition,
    pub base_point: String,
    pub witness: String,
}

/// Result of [`verify_covering`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoveringReport {
    pub base_points_checked: usize,
    pub violations: Vec<Violation>,
}

impl CoveringReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn condition_passed(&self, c: Condition) -> bool {
        self.violations.iter().all(|v| v.condition != c)
    }
}

impl fmt::Display for CoveringReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in Condition::ALL {
            let status = if self.condition_passed(c) {
                "PASS"
            } else {
                "FAIL"
            };
            writeln!(f, "condition ({}) {}: {status}", c.number(), c.describe())?;
            for v in self.violations.iter().filter(|v| v.condition == c) {
                writeln!(f, "  at {}: {}", v.base_point, v.witness)?;
            }
        }
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "covering conditions: {status}")
    }
}

/// Checks conditions (1)-(3) at every base point `x` and sheet `g`, using
/// `φ_g(x') = (x', g · F(x' <= x))` as the candidate inverse of `p` on
/// `U_(x,g)`.
pub fn verify_covering(c: &Covering) -> CoveringReport {
    let base = c.base();
    let total = c.total();
    let g = c.group();
    let name = |p: usize| total.label(p).to_string();
    let mut violations = Vec::new();
    for x in base.points() {
        let bx = base.label(x).to_string();
        let ux = base.minimal_open_set(x).expect("point of the base");
        let above = c.projection.preimage(&ux);
        let sheets: Vec<PointSet> = g
            .elements()
            .map(|e| {
                total
                    .minimal_open_set(c.point(x, e))
                    .expect("point of the total space")
            })
            .collect();

        let union: PointSet = sheets.iter().flatten().copied().collect();
        if union != above {
            let missing: Vec<String> = above.difference(&union).map(|&p| name(p)).collect();
            let extra: Vec<String> = union.difference(&above).map(|&p| name(p)).collect();
            violations.push(Violation {
                condition: Condition::Union,
                base_point: bx.clone(),
                witness: format!(
                    "missing {{{}}}, extra {{{}}}",
                    missing.join(","),
                    extra.join(",")
                ),
            });
        }

        for (i, si) in sheets.iter().enumerate() {
            for (j, sj) in sheets.iter().enumerate().skip(i + 1) {
                if let Some(&p) = si.intersection(sj).next() {
                    violations.push(Violation {
                        condition: Condition::Disjoint,
                        base_point: bx.clone(),
                        witness: format!(
                            "{} lies in both U{} and U{}",
                            name(p),
                            name(c.point(x, i)),
                            name(c.point(x, j))
                        ),
                    });
                }
            }
        }

        for (e, sheet) in sheets.iter().enumerate() {
            if let Some(w) = sheet_homeomorphism_failure(c, x, e, &ux, sheet) {
                violations.push(Violation {
                    condition: Condition::Homeomorphic,
                    base_point: bx.clone(),
                    witness: format!("sheet {}: {w}", name(c.point(x, e))),
                });
            }
        }
    }
    CoveringReport {
        base_points_checked: base.len(),
        violations,
    }
}

fn sheet_homeomorphism_failure(
    c: &Covering,
    x: usize,
    e: usize,
    ux: &PointSet,
    sheet: &PointSet,
) -> Option<String> {
    let total = c.total();
    let base = c.base();
    let g = c.group();
    let f = c.functor();
    let p = |q: usize| c.projection.apply(q);
    let image: PointSet = sheet.iter().map(|&q| p(q)).collect();
    if image != *ux || sheet.len() != ux.len() {
        return Some(format!(
            "p is not a bijection onto U_{} ({} points over {} base points)",
            base.label(x),
            sheet.len(),
            ux.len()
        ));
    }
    for &q in sheet {
        for &r in sheet {
            if total.leq(q, r) != base.leq(p(q), p(r)) {
                return Some(format!(
                    "order not preserved between {} and {}",
                    total.label(q),
                    total.label(r)
                ));
            }
        }
    }
    for &xp in ux {
        let fx = f.value_leq(xp, x).expect("x' in U_x");
        let phi = c.point(xp, g.op(e, fx));
        if !sheet.contains(&phi) {
            return Some(format!(
                "phi({}) = {} is not in the sheet",
                base.label(xp),
                total.label(phi)
            ));
        }
    }
    for &q in sheet {
        let (xp, _) = c.coordinates(q);
        let fx = f.value_leq(xp, x).expect("x' in U_x");
        if c.point(xp, g.op(e, fx)) != q {
            return Some(format!("phi(p({})) != {}", total.label(q), total.label(q)));
        }
    }
    None
}

/// The deck transformation `(x, h) -> (x, g·h)`.
pub fn deck_transformation(c: &Covering, g: usize) -> Result<PointMap> {
    let grp = c.group();
    if g >= grp.order() {
        return Err(Error::UnknownElement(g.to_string()));
    }
    let assignment = c
        .total
        .points()
        .map(|q| {
            let (x, h) = c.coordinates(q);
            c.point(x, grp.op(g, h))
        })
        .collect();
    PointMap::new(c.total.clone(), c.total.clone(), assignment)
}

/// Properties of the deck action, each checked exhaustively.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeckReport {
    /// Every `g_*` is a homeomorphism.
    pub homeomorphisms: bool,
    /// `p ∘ g_* = p`.
    pub over_base: bool,
    /// `g_* ∘ h_* = (g·h)_*`.
    pub composition_law: bool,
    /// Only the identity fixes a point.
    pub free: bool,
    /// Any two points of a fiber are related by some `g_*`.
    pub transitive_on_fibers: bool,
}

impl DeckReport {
    pub fn is_regular(&self) -> bool {
        self.homeomorphisms
            && self.over_base
            && self.composition_law
            && self.free
            && self.transitive_on_fibers
    }
}

pub fn check_deck_action(c: &Covering) -> DeckReport {
    let grp = c.group();
    let maps: Vec<PointMap> = grp
        .elements()
        .map(|g| deck_transformation(c, g).expect("element of the group"))
        .collect();
    let homeomorphisms = maps.iter().all(PointMap::is_homeomorphism);
    let over_base = maps.iter().all(|m| {
        c.total
            .points()
            .all(|q| c.projection.apply(m.apply(q)) == c.projection.apply(q))
    });
    let composition_law = grp.elements().all(|g| {
        grp.elements().all(|h| {
            let composed = maps[h].then(&maps[g]).expect("same space");
            composed == maps[grp.op(g, h)]
        })
    });
    let free = grp
        .elements()
        .filter(|&g| g != grp.identity())
        .all(|g| c.total.points().all(|q| maps[g].apply(q) != q));
    let transitive_on_fibers = c.base().points().all(|x| {
        let fiber = c.fiber(x);
        fiber.iter().all(|&q| {
            let orbit: BTreeSet<usize> = maps.iter().map(|m| m.apply(q)).collect();
            fiber.iter().all(|r| orbit.contains(r))
        })
    });
    DeckReport {
        homeomorphisms,
        over_base,
        composition_law,
        free,
        transitive_on_fibers,
    }
}

/// Number of components of the total space. Cross-checked against the
/// index `[G : im α]`; a mismatch is reported as an invariant violation.
pub fn pi0_cover(c: &Covering, h: &GroupHom) -> Result<usize> {
    let comps = c.base().connected_components().len();
    if comps != 1 {
        return Err(Error::Disconnected(comps));
    }
    if h.codomain() != c.group() {
        return Err(Error::SpaceMismatch);
    }
    let count = c.total.connected_components().len();
    let index = c.group().coset_count(&h.image())?;
    if count != index {
        return Err(Error::Invariant(format!(
            "total space has {count} components but [G : im] = {index}"
        )));
    }
    Ok(count)
}

/// The space `* ↓ F`: `(x,g) <= (x',g')` iff `x <= x'` and
/// `g' = F(x <= x') · g`.
pub fn opposite_comma_space(f: &GroupFunctor) -> FiniteSpace {
    let g = &f.group;
    let base = &f.space;
    let k = g.order();
    let n = base.len() * k;
    let mut leq = vec![vec![false; n]; n];
    for x in base.points() {
        for y in base.points() {
            let Some(fxy) = f.values[x][y] else { continue };
            for gx in g.elements() {
                leq[x * k + gx][y * k + g.op(fxy, gx)] = true;
            }
        }
    }
    FiniteSpace::from_matrix(product_labels(base, g), leq)
        .expect("opposite comma order is a preorder")
}

/// The homeomorphism `F ↓ * -> * ↓ F`, `(x,g) -> (x,g⁻¹)`, over `X`.
pub fn opposite_comma_iso(c: &Covering) -> PointMap {
    let opposite = opposite_comma_space(&c.functor);
    let grp = c.group();
    let assignment = c
        .total
        .points()
        .map(|q| {
            let (x, g) = c.coordinates(q);
            c.point(x, grp.inv(g))
        })
        .collect();
    PointMap::new(c.total.clone(), opposite, assignment).expect("same point count")
}

/// Whether `p⁻¹(A)` is literally `A × G`. Computed twice, from the functor
/// and from the total order; disagreement is an invariant violation.
pub fn restriction_is_product(c: &Covering, a: &SubSpace<'_>) -> Result<bool> {
    if a.parent() != c.base() {
        return Err(Error::SpaceMismatch);
    }
    let from_functor = is_trivial_on(&c.functor, a);
    let above: Vec<usize> = a.carrier().iter().flat_map(|&x| c.fiber(x)).collect();
    let decoupled = above.iter().all(|&q| {
        above.iter().all(|&r| {
            let (x, g) = c.coordinates(q);
            let (y, h) = c.coordinates(r);
            c.total.leq(q, r) == (c.base().leq(x, y) && g == h)
        })
    });
    if from_functor != decoupled {
        return Err(Error::Invariant(
            "functor triviality and order decoupling disagree on the subspace".into(),
        ));
    }
    Ok(from_functor)
}
