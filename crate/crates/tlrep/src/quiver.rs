//! Auslander-Reiten quivers, one connected component per block.
//!
//! For a non-critical orbit of length s the quiver is assembled in three
//! moves. First the τ-orbits: there are exactly s of them, each of size s,
//! produced by closed-form recipes built on the *reflection-deletion trick* —
//! a virtual zigzag with vertices outside 1..s is reduced by pairing every
//! out-of-range vertex with its mirror image (mirrors sit at 0 and s+1) and
//! deleting the pairs; what survives is a genuine indecomposable or nothing.
//! Second the irreducible morphisms: the inclusions of radicals into the
//! projectives and the projections of injectives onto their socle quotients
//! seed 6s−6 arrows, and *weaving* propagates any arrow u → v through the
//! translation pattern τ^m u → τ^m v, τ^m v → τ^{m−1} u until a chain ends or
//! a cycle closes. Adjacent τ-orbits in the order (t_0)(i_2)(t_2)(i_4)… weave
//! pairwise; nothing else does. Third, the projective-injective vertices
//! P_2 … P_s are attached through their radical/socle arrows.
//!
//! The β = 0 degeneration of TL keeps the same skeleton but T_1^1 and B_1^1
//! lose their projective/injective status (the (t_0) chain closes into a
//! cycle) and a fresh central projective appears with arrows B_1^1 → P_1 → T_1^1.
//!
//! Almost-split accounting over the composition factors — for every non-
//! projective V the factors of τV ⊕ V must equal those of the sources of the
//! arrows into V, dually for non-injectives — verifies each quiver after
//! construction; violations are reported, never repaired.

use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::{AlgebraCtx, OrbitView};
use crate::catalog::{normalize, AliasSpec, Factors, IndecClass};
use crate::error::{domain, Result};

/// Vertex of a block quiver, over the local labels 1..s of the orbit.
/// `B(a,l)`/`T(a,l)` are the zigzags (with `B(a,0)` the irreducible) and
/// `Proj(j)` the projective-injective vertices; `Proj(1)` only exists in the
/// degenerate blocks, where it is the inserted central projective.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LocalIndec {
    B { a: i64, l: i64 },
    T { a: i64, l: i64 },
    Proj(i64),
}

impl LocalIndec {
    pub fn irr(a: i64) -> Self {
        LocalIndec::B { a, l: 0 }
    }

    /// Twisted dual; irreducibles and projective-injectives are fixed.
    pub fn dual(self) -> Self {
        match self {
            LocalIndec::B { a, l } if l >= 1 => LocalIndec::T { a, l },
            LocalIndec::T { a, l } => LocalIndec::B { a, l },
            other => other,
        }
    }

    fn is_irreducible(self) -> bool {
        matches!(self, LocalIndec::B { l: 0, .. })
    }
}

impl fmt::Display for LocalIndec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            LocalIndec::B { a, l: 0 } => write!(f, "I{a}"),
            LocalIndec::B { a, l } => write!(f, "B{a}^{l}"),
            LocalIndec::T { a, l } => write!(f, "T{a}^{l}"),
            LocalIndec::Proj(j) => write!(f, "P{j}"),
        }
    }
}

/// Identity of a τ-orbit: `T(0)` is the chain through the standard and
/// costandard of the leftmost label, `T(2l)`/`I(2l)` are the cycles named
/// after the module `T_{2l}^2` and the irreducible `I_{2l}` they contain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TauOrbitId {
    T(i64),
    I(i64),
}

impl TauOrbitId {
    /// Position in the weaving order (t_0) ↔ (i_2) ↔ (t_2) ↔ (i_4) ↔ …
    pub fn position(self) -> i64 {
        match self {
            TauOrbitId::T(0) => 0,
            TauOrbitId::I(m) => m - 1,
            TauOrbitId::T(m) => m,
        }
    }
}

impl fmt::Display for TauOrbitId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TauOrbitId::T(m) => write!(f, "t{m}"),
            TauOrbitId::I(m) => write!(f, "i{m}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TauOrbitShape {
    Chain,
    Cycle,
}

/// A τ-orbit: members listed in the order of repeated τ⁻¹ application, so
/// τ(members[i+1]) = members[i], wrapping around for cycles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TauOrbit {
    pub id: TauOrbitId,
    pub shape: TauOrbitShape,
    pub members: Vec<LocalIndec>,
}

/// Apply the reflection-deletion trick to the virtual zigzag with vertices
/// k, k+1, …, k+j (k in the bottom row) over an orbit of length s. Returns
/// the surviving indecomposable, or `None` when everything cancels.
pub fn reflect_delete(k: i64, j: i64, s: i64) -> Result<Option<LocalIndec>> {
    if !(0..=2 * s + 1).contains(&j)
        || !(-s..=s).contains(&k)
        || !(1..=2 * s + 1).contains(&(j + k))
    {
        return Err(domain(format!(
            "reflection-deletion out of range: k={k}, j={j}, s={s}"
        )));
    }
    let hi_end = k + j;
    // vertices ≤ 0 pair with their mirror images through 0, vertices ≥ s+1
    // with the images through s+1; both deleted ranges are intervals
    let lo = if k <= 0 { -k + 1 } else { k };
    let hi = if hi_end > s {
        2 * s + 1 - hi_end
    } else {
        hi_end
    };
    if lo > hi {
        return Ok(None);
    }
    let a = lo;
    let l = hi - lo;
    if l == 0 {
        return Ok(Some(LocalIndec::irr(a)));
    }
    // row parity: position lo−k even means the left end sits in the bottom row
    Ok(Some(if (lo - k) % 2 == 0 {
        LocalIndec::B { a, l }
    } else {
        LocalIndec::T { a, l }
    }))
}

/// The s τ-orbits of a block of length s ≥ 2, in weaving order.
pub fn tau_orbits(s: i64) -> Result<Vec<TauOrbit>> {
    if s < 2 {
        return Err(domain("τ-orbit recipes need an orbit of length at least 2"));
    }
    let i = s / 2;
    let mut orbits = Vec::new();

    // (t_0): the chain from the standard to the costandard of label 1
    let odd_labels: Vec<i64> = (0..i).map(|step| 2 * step + 1).collect();
    let mut chain = Vec::new();
    for &a in &odd_labels {
        chain.push(LocalIndec::T { a, l: 1 });
    }
    if s % 2 == 1 {
        chain.push(LocalIndec::irr(s));
    }
    for &a in odd_labels.iter().rev() {
        chain.push(LocalIndec::B { a, l: 1 });
    }
    orbits.push(TauOrbit {
        id: TauOrbitId::T(0),
        shape: TauOrbitShape::Chain,
        members: chain,
    });

    // closure of a reflected-deleted zigzag list into a cycle: the originals
    // in order, then the duals in reverse order, self-dual entries unrepeated
    let close_cycle = |rds: Vec<LocalIndec>| -> Vec<LocalIndec> {
        let mut members = rds.clone();
        for v in rds.into_iter().rev() {
            if !v.is_irreducible() {
                members.push(v.dual());
            }
        }
        members
    };

    // (t_{2l}) for 1 ≤ l ≤ ⌊(s−1)/2⌋, built from the zigzags B_{1−m}^{2m+1}
    for l in 1..=(s - 1) / 2 {
        let m = 2 * l;
        let top = if s % 2 == 1 {
            2 * i + 1 - m
        } else {
            2 * i - 1 - m
        };
        let mut rds = Vec::new();
        let mut sub = top;
        while sub >= 1 - m {
            rds.push(reflect_delete(sub, 2 * m + 1, s)?.expect("recipe zigzags never vanish"));
            sub -= 2;
        }
        orbits.push(TauOrbit {
            id: TauOrbitId::T(m),
            shape: TauOrbitShape::Cycle,
            members: close_cycle(rds),
        });
    }

    // (i_{2l}) for 1 ≤ l ≤ ⌊s/2⌋, built from the zigzags B_{1−m}^{2m−1}
    for l in 1..=s / 2 {
        let m = if s % 2 == 1 { 2 * l } else { 2 * i + 1 - 2 * l };
        let mut rds = Vec::new();
        let mut sub = 2 * i + 1 - m;
        while sub >= 1 - m {
            rds.push(reflect_delete(sub, 2 * m - 1, s)?.expect("recipe zigzags never vanish"));
            sub -= 2;
        }
        orbits.push(TauOrbit {
            id: TauOrbitId::I(2 * l),
            shape: TauOrbitShape::Cycle,
            members: close_cycle(rds),
        });
    }

    orbits.sort_by_key(|o| o.id.position());
    Ok(orbits)
}

/// The 6s−6 seed arrows: radical inclusions and socle projections of the
/// projective and injective indecomposables.
pub fn seed_morphisms(s: i64) -> Vec<(LocalIndec, LocalIndec)> {
    let mut arrows = Vec::new();
    let (p1, j1) = (LocalIndec::T { a: 1, l: 1 }, LocalIndec::B { a: 1, l: 1 });
    arrows.push((j1, LocalIndec::irr(2)));
    arrows.push((LocalIndec::irr(2), p1));
    for j in 2..s {
        let t = LocalIndec::T { a: j - 1, l: 2 };
        let b = LocalIndec::B { a: j - 1, l: 2 };
        arrows.push((t, LocalIndec::Proj(j)));
        arrows.push((LocalIndec::Proj(j), b));
        arrows.push((t, LocalIndec::irr(j - 1)));
        arrows.push((LocalIndec::irr(j - 1), b));
        arrows.push((t, LocalIndec::irr(j + 1)));
        arrows.push((LocalIndec::irr(j + 1), b));
    }
    let t_end = LocalIndec::T { a: s - 1, l: 1 };
    let b_end = LocalIndec::B { a: s - 1, l: 1 };
    arrows.push((t_end, LocalIndec::Proj(s)));
    arrows.push((LocalIndec::Proj(s), b_end));
    arrows.push((t_end, LocalIndec::irr(s - 1)));
    arrows.push((LocalIndec::irr(s - 1), b_end));
    arrows
}

/// τ and τ⁻¹ restricted to a set of τ-orbits.
struct TauMaps {
    tau: BTreeMap<LocalIndec, LocalIndec>,
    tau_inv: BTreeMap<LocalIndec, LocalIndec>,
}

impl TauMaps {
    fn from_orbits(orbits: &[TauOrbit]) -> Self {
        let mut tau = BTreeMap::new();
        let mut tau_inv = BTreeMap::new();
        for orbit in orbits {
            let members = &orbit.members;
            for pair in members.windows(2) {
                tau.insert(pair[1], pair[0]);
                tau_inv.insert(pair[0], pair[1]);
            }
            if orbit.shape == TauOrbitShape::Cycle && members.len() > 1 {
                tau.insert(members[0], *members.last().unwrap());
                tau_inv.insert(*members.last().unwrap(), members[0]);
            }
            if orbit.shape == TauOrbitShape::Cycle && members.len() == 1 {
                tau.insert(members[0], members[0]);
                tau_inv.insert(members[0], members[0]);
            }
        }
        TauMaps { tau, tau_inv }
    }
}

/// Propagate one irreducible morphism through the translation pattern of two
/// contiguous τ-orbits, collecting every arrow of the weave.
pub fn weave(
    orbit_a: &TauOrbit,
    orbit_b: &TauOrbit,
    seed: (LocalIndec, LocalIndec),
) -> Result<Vec<(LocalIndec, LocalIndec)>> {
    let (u, v) = seed;
    let in_a = orbit_a.members.contains(&u);
    let in_b = orbit_b.members.contains(&v);
    let crossed = orbit_a.members.contains(&v) && orbit_b.members.contains(&u);
    if !(in_a && in_b) && !crossed {
        return Err(domain(format!(
            "seed {u} → {v} does not link the two τ-orbits"
        )));
    }
    if (orbit_a.id.position() - orbit_b.id.position()).abs() != 1 {
        return Err(domain(format!(
            "τ-orbits ({}) and ({}) are not contiguous",
            orbit_a.id, orbit_b.id
        )));
    }
    let maps = TauMaps::from_orbits(&[orbit_a.clone(), orbit_b.clone()]);
    let mut arrows: Vec<(LocalIndec, LocalIndec)> = vec![seed];
    let push = |arrows: &mut Vec<(LocalIndec, LocalIndec)>, arrow| {
        if arrows.contains(&arrow) {
            false
        } else {
            arrows.push(arrow);
            true
        }
    };
    // backwards: … τx → τy, τy → x, x → y
    let (mut x, mut y) = seed;
    while let Some(&ty) = maps.tau.get(&y) {
        if !push(&mut arrows, (ty, x)) {
            break;
        }
        let Some(&tx) = maps.tau.get(&x) else { break };
        if !push(&mut arrows, (tx, ty)) {
            break;
        }
        (x, y) = (tx, ty);
    }
    // forwards: x → y, y → τ⁻¹x, τ⁻¹x → τ⁻¹y, …
    let (mut x, mut y) = seed;
    while let Some(&ix) = maps.tau_inv.get(&x) {
        if !push(&mut arrows, (y, ix)) {
            break;
        }
        let Some(&iy) = maps.tau_inv.get(&y) else {
            break;
        };
        if !push(&mut arrows, (ix, iy)) {
            break;
        }
        (x, y) = (ix, iy);
    }
    arrows.sort();
    arrows.dedup();
    Ok(arrows)
}

/// The Auslander-Reiten quiver of one block.
#[derive(Debug, Clone)]
pub struct BlockQuiver {
    pub ctx: AlgebraCtx,
    /// Orbit members inside Λ_n (the degenerate blocks include the label 0).
    pub members: Vec<i64>,
    /// Labels carrying irreducibles; local label a maps to labels[a−1].
    pub labels: Vec<i64>,
    pub degenerate: bool,
    /// Set for critical singleton blocks.
    pub critical: Option<i64>,
    pub tau_orbits: Vec<TauOrbit>,
    pub vertices: Vec<LocalIndec>,
    pub arrows: Vec<(LocalIndec, LocalIndec)>,
    pub tau: BTreeMap<LocalIndec, LocalIndec>,
    pub tau_inv: BTreeMap<LocalIndec, LocalIndec>,
}

impl BlockQuiver {
    pub fn s(&self) -> i64 {
        self.labels.len() as i64
    }

    /// The canonical global class behind a local vertex.
    pub fn local_to_global(&self, v: LocalIndec) -> Result<IndecClass> {
        let label = |a: i64| -> Result<i64> {
            self.labels
                .get((a - 1) as usize)
                .copied()
                .ok_or_else(|| domain(format!("local label {a} outside 1..{}", self.s())))
        };
        let alias = match v {
            LocalIndec::B { a, l } => AliasSpec::B(label(a)?, l),
            LocalIndec::T { a, l } => AliasSpec::T(label(a)?, l),
            LocalIndec::Proj(j) => AliasSpec::Proj(label(j)?),
        };
        normalize(self.ctx, alias)?
            .sole_class()
            .ok_or_else(|| domain(format!("{v} does not name an indecomposable here")))
    }

    pub fn global_vertices(&self) -> Result<Vec<IndecClass>> {
        let mut out = self
            .vertices
            .iter()
            .map(|&v| self.local_to_global(v))
            .collect::<Result<Vec<_>>>()?;
        out.sort();
        Ok(out)
    }

    /// τ of a vertex: `None` encodes zero (projective vertices).
    pub fn tau_of(&self, v: LocalIndec) -> Result<Option<LocalIndec>> {
        if !self.vertices.contains(&v) {
            return Err(domain(format!("{v} is not a vertex of this block")));
        }
        Ok(self.tau.get(&v).copied())
    }

    /// τ⁻¹ of a vertex: `None` encodes zero (injective vertices).
    pub fn tau_inv_of(&self, v: LocalIndec) -> Result<Option<LocalIndec>> {
        if !self.vertices.contains(&v) {
            return Err(domain(format!("{v} is not a vertex of this block")));
        }
        Ok(self.tau_inv.get(&v).copied())
    }

    fn global_name(&self, v: LocalIndec) -> Result<String> {
        Ok(self.local_to_global(v)?.to_string())
    }

    fn block_name(&self) -> String {
        match self.critical {
            Some(k) => format!("critical_{k}"),
            None => format!("orbit_{}", self.members[0]),
        }
    }

    /// DOT digraph; solid edges are irreducible morphisms, `show_tau` adds
    /// dashed τ edges.
    pub fn dot(&self, show_tau: bool) -> Result<String> {
        let mut lines = Vec::new();
        lines.push(format!("digraph \"{}\" {{", self.block_name()));
        let mut names: Vec<String> = Vec::new();
        for &v in &self.vertices {
            names.push(format!("  \"{}\";", self.global_name(v)?));
        }
        names.sort();
        lines.extend(names);
        let mut edges: Vec<String> = Vec::new();
        for &(src, dst) in &self.arrows {
            edges.push(format!(
                "  \"{}\" -> \"{}\";",
                self.global_name(src)?,
                self.global_name(dst)?
            ));
        }
        if show_tau {
            for (&src, &dst) in &self.tau {
                edges.push(format!(
                    "  \"{}\" -> \"{}\" [style=dashed];",
                    self.global_name(src)?,
                    self.global_name(dst)?
                ));
            }
        }
        edges.sort();
        lines.extend(edges);
        lines.push("}".to_string());
        Ok(lines.join("\n"))
    }

    /// JSON value with deterministic ordering.
    pub fn json(&self) -> Result<serde_json::Value> {
        use serde_json::{json, Map, Value};
        let mut vertices: Vec<String> = Vec::new();
        for &v in &self.vertices {
            vertices.push(self.global_name(v)?);
        }
        vertices.sort();
        let mut arrows: Vec<Vec<String>> = Vec::new();
        for &(src, dst) in &self.arrows {
            arrows.push(vec![self.global_name(src)?, self.global_name(dst)?]);
        }
        arrows.sort();
        let mut tau = Map::new();
        for (&src, &dst) in &self.tau {
            tau.insert(
                self.global_name(src)?,
                Value::String(self.global_name(dst)?),
            );
        }
        let mut locals = Map::new();
        for &v in &self.vertices {
            locals.insert(v.to_string(), Value::String(self.global_name(v)?));
        }
        Ok(json!({
            "block": {
                "family": self.ctx.family.name(),
                "n": self.ctx.n,
                "ell": self.ctx.ell,
                "members": self.members,
                "labels": self.labels,
                "degenerate": self.degenerate,
                "critical": self.critical,
                "local_vertices": Value::Object(locals),
            },
            "vertices": vertices,
            "arrows": arrows,
            "tau": Value::Object(tau),
        }))
    }
}

/// Build the quiver of the block determined by an orbit of Λ_n.
pub fn build_block_quiver(ctx: AlgebraCtx, orbit: &OrbitView) -> Result<BlockQuiver> {
    let members: Vec<i64> = orbit.members().to_vec();
    let labels: Vec<i64> = members
        .iter()
        .copied()
        .filter(|&k| ctx.in_lambda0(k))
        .collect();
    let degenerate = ctx.degenerate() && !orbit.is_critical();
    if orbit.is_critical() {
        return Ok(BlockQuiver {
            ctx,
            members: members.clone(),
            labels: members,
            degenerate: false,
            critical: Some(orbit.members()[0]),
            tau_orbits: Vec::new(),
            vertices: vec![LocalIndec::irr(1)],
            arrows: Vec::new(),
            tau: BTreeMap::new(),
            tau_inv: BTreeMap::new(),
        });
    }
    let s = labels.len() as i64;
    if s == 1 && !degenerate {
        return Ok(BlockQuiver {
            ctx,
            members,
            labels,
            degenerate,
            critical: None,
            tau_orbits: Vec::new(),
            vertices: vec![LocalIndec::irr(1)],
            arrows: Vec::new(),
            tau: BTreeMap::new(),
            tau_inv: BTreeMap::new(),
        });
    }
    if s == 1 {
        // degenerate two-vertex block: Irr(2) and its projective cover
        let irr = LocalIndec::irr(1);
        let proj = LocalIndec::Proj(1);
        let orbits = vec![TauOrbit {
            id: TauOrbitId::I(2),
            shape: TauOrbitShape::Cycle,
            members: vec![irr],
        }];
        let maps = TauMaps::from_orbits(&orbits);
        return Ok(BlockQuiver {
            ctx,
            members,
            labels,
            degenerate,
            critical: None,
            tau_orbits: orbits,
            vertices: vec![irr, proj],
            arrows: vec![(irr, proj), (proj, irr)],
            tau: maps.tau,
            tau_inv: maps.tau_inv,
        });
    }

    let mut orbits = tau_orbits(s)?;
    if degenerate {
        // T_1^1 and B_1^1 are no longer projective/injective: the chain closes
        for orbit in &mut orbits {
            if orbit.id == TauOrbitId::T(0) {
                orbit.shape = TauOrbitShape::Cycle;
            }
        }
    }
    let maps = TauMaps::from_orbits(&orbits);

    let mut vertices: Vec<LocalIndec> = Vec::new();
    for orbit in &orbits {
        vertices.extend(orbit.members.iter().copied());
    }
    for j in 2..=s {
        vertices.push(LocalIndec::Proj(j));
    }
    if degenerate {
        vertices.push(LocalIndec::Proj(1));
    }
    vertices.sort();

    // locate each seed's τ-orbit pair and weave every contiguous pair once
    let position_of =
        |v: LocalIndec| -> Option<usize> { orbits.iter().position(|o| o.members.contains(&v)) };
    let seeds = seed_morphisms(s);
    let mut arrows: Vec<(LocalIndec, LocalIndec)> = Vec::new();
    for window in 0..orbits.len() - 1 {
        let seed = seeds
            .iter()
            .copied()
            .find(|&(u, v)| {
                let (pu, pv) = (position_of(u), position_of(v));
                pu.is_some()
                    && pv.is_some()
                    && pu.min(pv) == Some(window)
                    && pu.max(pv) == Some(window + 1)
            })
            .ok_or_else(|| {
                domain(format!(
                    "no seed morphism links τ-orbits {} and {}",
                    orbits[window].id,
                    orbits[window + 1].id
                ))
            })?;
        arrows.extend(weave(&orbits[window], &orbits[window + 1], seed)?);
    }
    // projective-injective vertices and their radical/socle arrows
    for &(src, dst) in &seeds {
        if matches!(src, LocalIndec::Proj(_)) || matches!(dst, LocalIndec::Proj(_)) {
            arrows.push((src, dst));
        }
    }
    if degenerate {
        arrows.push((LocalIndec::B { a: 1, l: 1 }, LocalIndec::Proj(1)));
        arrows.push((LocalIndec::Proj(1), LocalIndec::T { a: 1, l: 1 }));
    }
    arrows.sort();
    arrows.dedup();

    Ok(BlockQuiver {
        ctx,
        members,
        labels,
        degenerate,
        critical: None,
        tau_orbits: orbits,
        vertices,
        arrows,
        tau: maps.tau,
        tau_inv: maps.tau_inv,
    })
}

/// One quiver per block of the algebra, ordered by smallest orbit member.
pub fn full_quiver(ctx: AlgebraCtx) -> Result<Vec<BlockQuiver>> {
    ctx.all_orbits()
        .iter()
        .map(|orbit| build_block_quiver(ctx, orbit))
        .collect()
}

/// One failed almost-split check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub block: String,
    pub message: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}", self.block, self.message)
    }
}

/// Check every almost-split sequence of the block by factor accounting, plus
/// the arrow-count symmetry #(U→V) = #(τV→U) and multiplicity-one property.
pub fn verify_almost_split(quiver: &BlockQuiver) -> Result<Vec<Violation>> {
    let mut violations = Vec::new();
    let block = match quiver.critical {
        Some(k) => format!("{:?} critical {k}", quiver.ctx),
        None => format!("{:?} orbit {:?}", quiver.ctx, quiver.members),
    };
    let mut report = |message: String| {
        violations.push(Violation {
            block: block.clone(),
            message,
        });
    };
    let factors_of =
        |v: LocalIndec| -> Result<Factors> { quiver.local_to_global(v)?.composition_factors() };
    let mut seen = std::collections::BTreeSet::new();
    for &arrow in &quiver.arrows {
        if !seen.insert(arrow) {
            report(format!(
                "arrow {} → {} has multiplicity above one",
                arrow.0, arrow.1
            ));
        }
    }
    for &v in &quiver.vertices {
        // incoming accounting for non-projective vertices
        if let Some(&tv) = quiver.tau.get(&v) {
            let mut expected = factors_of(v)?;
            expected.union(&factors_of(tv)?);
            let mut middle = Factors::new();
            for &(src, dst) in &quiver.arrows {
                if dst == v {
                    middle.union(&factors_of(src)?);
                }
            }
            if expected != middle {
                report(format!(
                    "almost-split failure into {v}: τ{v} = {tv}, factors {expected} vs middle {middle}"
                ));
            }
            // arrow symmetry: every U → v matches an arrow τv → U
            for &(src, dst) in &quiver.arrows {
                if dst == v && !quiver.arrows.contains(&(tv, src)) {
                    report(format!("arrow {src} → {v} has no mate {tv} → {src}"));
                }
            }
        }
        // outgoing accounting for non-injective vertices
        if let Some(&iv) = quiver.tau_inv.get(&v) {
            let mut expected = factors_of(v)?;
            expected.union(&factors_of(iv)?);
            let mut middle = Factors::new();
            for &(src, dst) in &quiver.arrows {
                if src == v {
                    middle.union(&factors_of(dst)?);
                }
            }
            if expected != middle {
                report(format!(
                    "almost-split failure out of {v}: τ⁻¹{v} = {iv}, factors {expected} vs middle {middle}"
                ));
            }
        }
    }
    Ok(violations)
}
