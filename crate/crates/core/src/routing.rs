//! Constructive host paths for every embedding with a transcribed proof
//! chain: cyclic-shift decomposition, the grid-family block-boundary
//! step, symbol swaps across larger-symbol blocks (mixed grid, pancake
//! and star), and the three-position cycle chains (generalized
//! hypercube, pancake and star).
//!
//! All chains are upper bounds: any step that would reverse a prefix of
//! length < 2 is dropped, and two identical consecutive moves cancel
//! (every generator is an involution). Each constructor checks its own
//! endpoint and reports a mismatch instead of returning a wrong path.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::perm::{CyclicShift, Permutation};
use crate::representation::{diff3_decompose, left_count_encode, rule_r_encode};
use crate::topology::{pancake_neighbors, star_neighbors, GraphKind};

/// A single host move: a prefix-reversal index or a star-swap position.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Move {
    Flip(usize),
    Swap(usize),
}

impl Move {
    pub fn apply(&self, p: &Permutation) -> Result<Permutation> {
        match *self {
            Move::Flip(i) => p.prefix_reverse(i),
            Move::Swap(i) => p.star_swap(i),
        }
    }
}

/// A walk in a host graph, kept consistent between its vertex list and
/// its move list (`vertices[t+1] = moves[t](vertices[t])`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HostPath {
    vertices: Vec<Permutation>,
    moves: Vec<Move>,
}

impl HostPath {
    pub fn single(start: Permutation) -> Self {
        Self {
            vertices: vec![start],
            moves: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    pub fn start(&self) -> &Permutation {
        self.vertices.first().expect("nonempty path")
    }

    pub fn end(&self) -> &Permutation {
        self.vertices.last().expect("nonempty path")
    }

    pub fn vertices(&self) -> &[Permutation] {
        &self.vertices
    }

    pub fn moves(&self) -> &[Move] {
        &self.moves
    }

    /// The same walk traversed backwards. Valid because every move is an
    /// involution.
    pub fn reversed(&self) -> Self {
        Self {
            vertices: self.vertices.iter().rev().cloned().collect(),
            moves: self.moves.iter().rev().copied().collect(),
        }
    }

    /// Rebuilds a path from an explicit vertex list, inferring each move.
    /// Fails if consecutive vertices are not host-adjacent.
    pub fn from_vertices(host: &GraphKind, vertices: Vec<Permutation>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::MalformedDocument("empty route".into()));
        }
        let mut moves = Vec::with_capacity(vertices.len() - 1);
        for w in vertices.windows(2) {
            let mv = move_between(host, &w[0], &w[1]).ok_or_else(|| Error::NotAdjacent {
                kind: host.to_string(),
                detail: format!("{} -> {}", w[0], w[1]),
            })?;
            moves.push(mv);
        }
        Ok(Self { vertices, moves })
    }
}

/// Incremental path construction with degenerate-step elision: indices
/// below 2 are skipped, and a move identical to the previous one cancels
/// it (the pair is the identity).
struct PathBuilder {
    vertices: Vec<Permutation>,
    moves: Vec<Move>,
}

impl PathBuilder {
    fn new(start: Permutation) -> Self {
        Self {
            vertices: vec![start],
            moves: Vec::new(),
        }
    }

    fn push(&mut self, mv: Move) -> Result<()> {
        let idx = match mv {
            Move::Flip(i) | Move::Swap(i) => i,
        };
        if idx < 2 {
            return Ok(());
        }
        if self.moves.last() == Some(&mv) {
            self.moves.pop();
            self.vertices.pop();
            return Ok(());
        }
        let next = mv.apply(self.vertices.last().unwrap())?;
        self.vertices.push(next);
        self.moves.push(mv);
        Ok(())
    }

    fn flip(&mut self, i: usize) -> Result<()> {
        self.push(Move::Flip(i))
    }

    fn swap(&mut self, i: usize) -> Result<()> {
        self.push(Move::Swap(i))
    }

    fn finish(self, target: &Permutation, what: &str) -> Result<HostPath> {
        let path = HostPath {
            vertices: self.vertices,
            moves: self.moves,
        };
        if path.end() != target {
            return Err(Error::RouteMismatch(format!(
                "{what}: reached {} instead of {target}",
                path.end()
            )));
        }
        Ok(path)
    }
}

/// The generator that turns `u` into `v` in the given host, if any.
pub fn move_between(host: &GraphKind, u: &Permutation, v: &Permutation) -> Option<Move> {
    if u.n() != v.n() || u == v {
        return None;
    }
    let i = u.position_of(v.symbol_at(1));
    if i < 2 {
        return None;
    }
    match host {
        GraphKind::Pancake { .. } => (u.prefix_reverse(i).ok()? == *v).then_some(Move::Flip(i)),
        GraphKind::Star { .. } => (u.star_swap(i).ok()? == *v).then_some(Move::Swap(i)),
        _ => None,
    }
}

/// Path from `p` to `p·σ(ℓ,m)` using at most three reversals:
/// `ABC → ĀBC → B̄AC → BAC`. Length 3 in general, 2 when `m = 1` or
/// `m = ℓ-1`, empty for the identity shifts `m = 0` and `m = ℓ`.
pub fn route_sigma(p: &Permutation, shift: &CyclicShift) -> Result<HostPath> {
    let n = p.n();
    let (ell, m) = (shift.ell(), shift.m());
    if ell > n {
        return Err(Error::ShiftOutOfRange { ell, m, n });
    }
    if m == 0 || m == ell {
        return Ok(HostPath::single(p.clone()));
    }
    let target = p.compose(&shift.word(n)?)?;
    let mut b = PathBuilder::new(p.clone());
    b.flip(ell - m)?;
    b.flip(ell)?;
    b.flip(m)?;
    b.finish(&target, "route_sigma")
}

/// The grid-family block-boundary step: from `base·σ(k,k-1)` to
/// `base·σ(k-1,1)` in at most four reversals.
///
/// With `base = x_1 A x_{k-1} x_k B`, the chain is
/// `A x_{k-1} x_k x_1 B → x_k x_{k-1} Ā x_1 B → x_1 A x_{k-1} x_k B →
/// Ā x_1 x_{k-1} x_k B → x_{k-1} x_1 A x_k B`.
pub fn route_grid_family_step(x: &Permutation, k: usize) -> Result<HostPath> {
    let n = x.n();
    if k < 3 || k > n {
        return Err(Error::GeneratorIndex { index: k, n });
    }
    // base = x · σ(k,k-1)^{-1} = x · σ(k,1); target = base · σ(k-1,1).
    let base = x.compose(&CyclicShift::new(k, 1)?.word(n)?)?;
    let target = base.compose(&CyclicShift::new(k - 1, 1)?.word(n)?)?;
    let mut b = PathBuilder::new(x.clone());
    b.flip(k - 1)?;
    b.flip(k)?;
    b.flip(k - 2)?;
    b.flip(k - 1)?;
    b.finish(&target, "route_grid_family_step")
}

/// Locates the swap structure of two permutations whose left-count
/// representations differ by one in a single digit: the one with the
/// larger digit has the form `A x_k B i C` (all of `B` larger than `i`),
/// the other `A i B x_k C`. Returns (src, dst, p1, p2, reversed) where
/// src is the larger-digit side and p1 < p2 are the swap positions.
fn mixed_grid_endpoints<'a>(
    x: &'a Permutation,
    y: &'a Permutation,
) -> Result<(&'a Permutation, &'a Permutation, usize, usize, bool)> {
    let rx = left_count_encode(x)?;
    let ry = left_count_encode(y)?;
    let diff = rx.differing_coords(&ry);
    if diff.len() != 1 || rx.digit(diff[0]).abs_diff(ry.digit(diff[0])) != 1 {
        return Err(Error::NotAdjacent {
            kind: "mixed_grid".into(),
            detail: format!("{x} and {y} do not differ by one unit in one digit"),
        });
    }
    let i = diff[0];
    let (src, dst, reversed) = if rx.digit(i) > ry.digit(i) {
        (x, y, false)
    } else {
        (y, x, true)
    };
    // In src, symbol i is preceded by its swap partner: the nearest
    // smaller symbol on its left, with only larger symbols between.
    let p2 = src.position_of(i as u8);
    let p1 = (1..p2)
        .rev()
        .find(|&q| src.symbol_at(q) < i as u8)
        .ok_or_else(|| Error::NotAdjacent {
            kind: "mixed_grid".into(),
            detail: format!("no smaller symbol precedes {i} in {src}"),
        })?;
    Ok((src, dst, p1, p2, reversed))
}

/// Swap chain `A x B y C → x Ā B y C → y B̄ A x C → B y A x C →
/// B̄ y A x C → Ā y B x C → A y B x C`: six reversals exchanging the
/// symbols at positions `p1 < p2`, leaving everything else fixed.
fn swap_chain_pancake(
    src: &Permutation,
    dst: &Permutation,
    p1: usize,
    p2: usize,
    what: &str,
) -> Result<HostPath> {
    let a = p1 - 1;
    let b = p2 - p1 - 1;
    let mut builder = PathBuilder::new(src.clone());
    builder.flip(a + 1)?;
    builder.flip(a + b + 2)?;
    builder.flip(b + 1)?;
    builder.flip(b)?;
    builder.flip(a + b + 1)?;
    builder.flip(a)?;
    builder.finish(dst, what)
}

/// Pancake path of length at most 6 between mixed-grid neighbours
/// (left-count representations differing by one unit in one digit).
pub fn route_mixed_grid_pancake(x: &Permutation, y: &Permutation) -> Result<HostPath> {
    let (src, dst, p1, p2, reversed) = mixed_grid_endpoints(x, y)?;
    let path = swap_chain_pancake(src, dst, p1, p2, "route_mixed_grid_pancake")?;
    Ok(if reversed { path.reversed() } else { path })
}

/// Star swap chain for two positions `p1 < p2`: the conjugated
/// transposition `τ(1,p2) τ(1,p1) τ(1,p2)`, or a single swap when the
/// first differing position is 1. Symmetric, so no orientation needed.
fn swap_chain_star(
    src: &Permutation,
    dst: &Permutation,
    p1: usize,
    p2: usize,
    what: &str,
) -> Result<HostPath> {
    let mut b = PathBuilder::new(src.clone());
    if p1 == 1 {
        b.swap(p2)?;
    } else {
        b.swap(p2)?;
        b.swap(p1)?;
        b.swap(p2)?;
    }
    b.finish(dst, what)
}

/// Star path of length at most 3 between mixed-grid neighbours:
/// `aAxByC → yAxBaC → xAyBaC → aAyBxC`.
pub fn route_mixed_grid_star(x: &Permutation, y: &Permutation) -> Result<HostPath> {
    let (src, dst, p1, p2, _) = mixed_grid_endpoints(x, y)?;
    let path = swap_chain_star(src, dst, p1, p2, "route_mixed_grid_star")?;
    Ok(if path.start() == x {
        path
    } else {
        path.reversed()
    })
}

fn ghc_adjacency_check(x: &Permutation, y: &Permutation) -> Result<()> {
    let rx = rule_r_encode(x)?;
    let ry = rule_r_encode(y)?;
    if rx.differing_coords(&ry).len() != 1 {
        return Err(Error::NotAdjacent {
            kind: "ghc".into(),
            detail: format!("{x} and {y} do not differ in exactly one rule-R digit"),
        });
    }
    Ok(())
}

/// Pancake path of length at most 8 between rule-R neighbours. The
/// three-position cycle `AxByCzD → AzBxCyD` uses the eight-step chain
/// `AxByCzD → zC̄yB̄xĀD → xByCzĀD → B̄xyCzĀD → BxyCzĀD → C̄yxB̄zĀD →
/// CyxB̄zĀD → yC̄xB̄zĀD → AzBxCyD`; the two-position degenerate form
/// collapses to the six-step swap chain.
pub fn route_ghc_pancake(x: &Permutation, y: &Permutation) -> Result<HostPath> {
    ghc_adjacency_check(x, y)?;
    let d = diff3_decompose(x, y)?;
    let pos = d.positions();
    if d.is_degenerate() {
        return swap_chain_pancake(x, y, pos[0], pos[1], "route_ghc_pancake");
    }
    let (src, dst, reversed) = if d.x_is_forward() {
        (x, y, false)
    } else {
        (y, x, true)
    };
    let (p1, p2, p3) = (pos[0], pos[1], pos[2]);
    let a = p1 - 1;
    let b = p2 - p1 - 1;
    let c = p3 - p2 - 1;
    let mut builder = PathBuilder::new(src.clone());
    builder.flip(a + b + c + 3)?;
    builder.flip(b + c + 3)?;
    builder.flip(b + 1)?;
    builder.flip(b)?;
    builder.flip(b + c + 2)?;
    builder.flip(c)?;
    builder.flip(c + 1)?;
    builder.flip(a + b + c + 3)?;
    let path = builder.finish(dst, "route_ghc_pancake")?;
    Ok(if reversed { path.reversed() } else { path })
}

/// Star path of length at most 4 between rule-R neighbours:
/// `aAxByCzD → yAxBaCzD → zAxBaCyD → xAzBaCyD → aAzBxCyD`, with the
/// shortened direct chain when a differing symbol sits at position 1.
pub fn route_ghc_star(x: &Permutation, y: &Permutation) -> Result<HostPath> {
    ghc_adjacency_check(x, y)?;
    let d = diff3_decompose(x, y)?;
    let pos = d.positions();
    if d.is_degenerate() {
        return swap_chain_star(x, y, pos[0], pos[1], "route_ghc_star");
    }
    let (src, dst, reversed) = if d.x_is_forward() {
        (x, y, false)
    } else {
        (y, x, true)
    };
    let (p1, p2, p3) = (pos[0], pos[1], pos[2]);
    let mut b = PathBuilder::new(src.clone());
    if p1 == 1 {
        b.swap(p2)?;
        b.swap(p3)?;
    } else {
        b.swap(p2)?;
        b.swap(p3)?;
        b.swap(p1)?;
        b.swap(p2)?;
    }
    let path = b.finish(dst, "route_ghc_star")?;
    Ok(if reversed { path.reversed() } else { path })
}

/// Outcome of a structural check, with a diagnostic for the first
/// violation found.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CheckOutcome {
    Pass,
    Fail(String),
}

impl CheckOutcome {
    pub fn is_pass(&self) -> bool {
        matches!(self, CheckOutcome::Pass)
    }

    pub fn failure(&self) -> Option<&str> {
        match self {
            CheckOutcome::Pass => None,
            CheckOutcome::Fail(msg) => Some(msg),
        }
    }
}

/// Checks that every consecutive pair of vertices is host-adjacent and
/// that the recorded moves reproduce the vertex list.
pub fn validate_path(path: &HostPath, host: &GraphKind) -> CheckOutcome {
    if path.moves().len() + 1 != path.vertices().len() {
        return CheckOutcome::Fail(format!(
            "{} moves for {} vertices",
            path.moves().len(),
            path.vertices().len()
        ));
    }
    for (t, mv) in path.moves().iter().enumerate() {
        let cur = &path.vertices()[t];
        let next = &path.vertices()[t + 1];
        match (host, mv) {
            (GraphKind::Pancake { .. }, Move::Flip(_))
            | (GraphKind::Star { .. }, Move::Swap(_)) => {}
            _ => return CheckOutcome::Fail(format!("step {t}: move {mv:?} not valid in {host}")),
        }
        match mv.apply(cur) {
            Ok(applied) if &applied == next => {}
            _ => {
                return CheckOutcome::Fail(format!(
                    "step {t}: move {mv:?} does not send {cur} to {next}"
                ))
            }
        }
        match host.are_adjacent(
            &crate::topology::Vertex::Perm(cur.clone()),
            &crate::topology::Vertex::Perm(next.clone()),
        ) {
            Ok(true) => {}
            _ => return CheckOutcome::Fail(format!("step {t}: {cur} and {next} not adjacent")),
        }
    }
    CheckOutcome::Pass
}

/// Breadth-first shortest path between two host vertices, visiting
/// neighbours in ascending generator order so the result is
/// deterministic. Intended as the fallback when a transcribed chain
/// fails, and as an independent check on constructive route lengths.
pub fn bfs_shortest_path(
    host: &GraphKind,
    from: &Permutation,
    to: &Permutation,
) -> Result<HostPath> {
    host.validate()?;
    let neighbors = |p: &Permutation| -> Result<Vec<Permutation>> {
        match host {
            GraphKind::Pancake { .. } => pancake_neighbors(p),
            GraphKind::Star { .. } => star_neighbors(p),
            _ => Err(Error::GraphParameter(format!("{host} is not a host"))),
        }
    };
    if from.n() != to.n() {
        return Err(Error::DimensionMismatch(from.n(), to.n()));
    }
    if from == to {
        return Ok(HostPath::single(from.clone()));
    }
    let mut parent: HashMap<Permutation, Permutation> = HashMap::new();
    let mut frontier = vec![from.clone()];
    parent.insert(from.clone(), from.clone());
    'outer: while !frontier.is_empty() {
        let mut next_frontier = Vec::new();
        for cur in &frontier {
            for nb in neighbors(cur)? {
                if !parent.contains_key(&nb) {
                    parent.insert(nb.clone(), cur.clone());
                    if &nb == to {
                        break 'outer;
                    }
                    next_frontier.push(nb);
                }
            }
        }
        frontier = next_frontier;
    }
    if !parent.contains_key(to) {
        return Err(Error::GraphParameter(format!(
            "no path from {from} to {to} in {host}"
        )));
    }
    let mut vertices = vec![to.clone()];
    while vertices.last().unwrap() != from {
        let prev = parent[vertices.last().unwrap()].clone();
        vertices.push(prev);
    }
    vertices.reverse();
    HostPath::from_vertices(host, vertices)
}
