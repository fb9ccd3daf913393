//! Guest-to-host embeddings, each an explicit injective vertex map with
//! optional constructive routes: rings and lines along the pancake
//! sequence, the two cyclic-shift grid families, the mixed-radix grid
//! into pancake and star via the left-count coding, the generalized
//! hypercube into pancake and star via the rule-R coding, and binary
//! hypercubes as subgraphs of either intermediate structure.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::perm::{apply_gen_seq, factorial, CyclicShift, GenSeq, Permutation};
use crate::representation::{left_count_decode, rule_r_decode, MixedRadixLabel};
use crate::routing::{
    bfs_shortest_path, route_ghc_pancake, route_ghc_star, route_mixed_grid_pancake,
    route_mixed_grid_star, HostPath, Move,
};
use crate::topology::{bits_of, labels, GraphKind, Vertex};

/// Which construction produced an embedding; distinguishes the two
/// hypercube routes and drives route generation and declared bounds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Construction {
    RingCycle,
    LinePath,
    GridNFact,
    GridFamily {
        p: usize,
    },
    MixedGridPancake,
    MixedGridStar,
    HypercubeMixedGrid,
    GhcPancake,
    GhcStar,
    HypercubeGhc,
    /// Loaded from a file without a recognized construction tag.
    External,
}

impl Construction {
    pub fn name(&self) -> String {
        match self {
            Construction::RingCycle => "ring-cycle".into(),
            Construction::LinePath => "line-path".into(),
            Construction::GridNFact => "grid-nfact".into(),
            Construction::GridFamily { p } => format!("grid-family(p={p})"),
            Construction::MixedGridPancake | Construction::MixedGridStar => "mixed-grid".into(),
            Construction::GhcPancake | Construction::GhcStar => "ghc-rule-r".into(),
            Construction::HypercubeMixedGrid => "hypercube-mixed-grid".into(),
            Construction::HypercubeGhc => "hypercube-ghc".into(),
            Construction::External => "external".into(),
        }
    }
}

/// An injective guest-vertex → host-vertex map, with optional per-edge
/// host routes, in guest enumeration order.
#[derive(Clone, Debug)]
pub struct Embedding {
    guest: GraphKind,
    host: GraphKind,
    construction: Construction,
    map: Vec<(Vertex, Permutation)>,
    lookup: HashMap<Vertex, Permutation>,
    routes: Option<Vec<((Vertex, Vertex), HostPath)>>,
    declared_dilation: Option<u32>,
    declared_congestion: Option<u32>,
    fallback_log: Vec<(Vertex, Vertex)>,
}

impl Embedding {
    pub fn from_parts(
        guest: GraphKind,
        host: GraphKind,
        construction: Construction,
        map: Vec<(Vertex, Permutation)>,
        routes: Option<Vec<((Vertex, Vertex), HostPath)>>,
        declared_dilation: Option<u32>,
        declared_congestion: Option<u32>,
    ) -> Result<Self> {
        guest.validate()?;
        host.validate()?;
        let lookup: HashMap<Vertex, Permutation> = map.iter().cloned().collect();
        if lookup.len() != map.len() {
            return Err(Error::MalformedDocument(
                "repeated guest vertex in map".into(),
            ));
        }
        Ok(Self {
            guest,
            host,
            construction,
            map,
            lookup,
            routes,
            declared_dilation,
            declared_congestion,
            fallback_log: Vec::new(),
        })
    }

    pub fn guest(&self) -> GraphKind {
        self.guest
    }

    pub fn host(&self) -> GraphKind {
        self.host
    }

    pub fn construction(&self) -> Construction {
        self.construction
    }

    pub fn map(&self) -> &[(Vertex, Permutation)] {
        &self.map
    }

    pub fn routes(&self) -> Option<&[((Vertex, Vertex), HostPath)]> {
        self.routes.as_deref()
    }

    pub fn declared_dilation(&self) -> Option<u32> {
        self.declared_dilation
    }

    pub fn declared_congestion(&self) -> Option<u32> {
        self.declared_congestion
    }

    /// Guest edges whose constructive route failed and fell back to a
    /// breadth-first shortest path.
    pub fn fallback_log(&self) -> &[(Vertex, Vertex)] {
        &self.fallback_log
    }

    pub fn image_of(&self, v: &Vertex) -> Result<&Permutation> {
        self.lookup
            .get(v)
            .ok_or_else(|| Error::UnmappedVertex(v.to_string()))
    }

    /// Host-to-guest vertex count as a reduced rational.
    pub fn expansion(&self) -> Result<(u64, u64)> {
        let h = self.host.vertex_count()?;
        let g = self.guest.vertex_count()?;
        let d = gcd(h, g);
        Ok((h / d, g / d))
    }

    /// Full structural validation: every guest vertex mapped, images
    /// distinct and valid host vertices, routes (when present) keyed by
    /// guest edges with matching endpoints and host-adjacent steps.
    pub fn validate(&self) -> Result<()> {
        let n_host = match self.host {
            GraphKind::Pancake { n } | GraphKind::Star { n } => n,
            _ => {
                return Err(Error::GraphParameter(format!(
                    "host {} must be a pancake or star network",
                    self.host
                )))
            }
        };
        let expected = self.guest.vertex_count()?;
        if self.map.len() as u64 != expected {
            return Err(Error::MalformedDocument(format!(
                "map covers {} of {} guest vertices",
                self.map.len(),
                expected
            )));
        }
        let mut images = std::collections::HashSet::new();
        for (v, img) in &self.map {
            if img.n() != n_host {
                return Err(Error::MalformedDocument(format!(
                    "image {img} of {v} has wrong dimension"
                )));
            }
            if !images.insert(img.clone()) {
                return Err(Error::MalformedDocument(format!(
                    "image {img} repeated; map not injective"
                )));
            }
        }
        for v in self.guest.vertices()? {
            if !self.lookup.contains_key(&v) {
                return Err(Error::UnmappedVertex(v.to_string()));
            }
        }
        if let Some(routes) = &self.routes {
            for ((u, v), path) in routes {
                if !self.guest.are_adjacent(u, v)? {
                    return Err(Error::MalformedDocument(format!(
                        "route keyed by non-edge ({u},{v})"
                    )));
                }
                if path.start() != self.image_of(u)? || path.end() != self.image_of(v)? {
                    return Err(Error::MalformedDocument(format!(
                        "route for ({u},{v}) does not join the endpoint images"
                    )));
                }
                if let crate::routing::CheckOutcome::Fail(msg) =
                    crate::routing::validate_path(path, &self.host)
                {
                    return Err(Error::MalformedDocument(format!(
                        "invalid route for ({u},{v}): {msg}"
                    )));
                }
            }
        }
        Ok(())
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// The pancake sequence `G_k`: `G_2 = (g_2)`, and `G_k` interleaves `k`
/// copies of `G_{k-1}` with `k-1` occurrences of `g_k`. Length `k! - 1`.
pub fn pancake_sequence(k: usize) -> Result<GenSeq> {
    if k < 2 {
        return Err(Error::InvalidDimension(k, "pancake sequence needs k >= 2"));
    }
    if k > 10 {
        return Err(Error::DimensionCapExceeded { n: k, cap: 10 });
    }
    let mut seq: Vec<usize> = vec![2];
    for j in 3..=k {
        let block = seq.clone();
        let mut next = Vec::with_capacity(factorial(j) as usize - 1);
        for copy in 0..j {
            if copy > 0 {
                next.push(j);
            }
            next.extend_from_slice(&block);
        }
        seq = next;
    }
    GenSeq::new(seq)
}

/// Applies `G_k` from `start`: a Hamiltonian cycle of the `k`-pancake
/// containing `start`, with `k!` entries, the last adjacent to the first
/// through `g_k`.
pub fn hamiltonian_cycle(start: &Permutation, k: usize) -> Result<Vec<Permutation>> {
    let n = start.n();
    if k < 3 {
        return Err(Error::InvalidDimension(k, "hamiltonian cycle needs k >= 3"));
    }
    if k > n {
        return Err(Error::GeneratorIndex { index: k, n });
    }
    apply_gen_seq(start, &pancake_sequence(k)?)
}

/// Ring of size `k!` along the Hamiltonian cycle from the identity;
/// every route is a single host edge, so dilation and congestion are 1.
pub fn embed_ring(k: usize, n: usize) -> Result<Embedding> {
    if k < 3 || k > n {
        return Err(Error::GraphParameter(format!(
            "ring embedding needs 3 <= k <= n, got k={k}, n={n}"
        )));
    }
    let seq = pancake_sequence(k)?;
    let cycle = apply_gen_seq(&Permutation::identity(n)?, &seq)?;
    let size = cycle.len() as u64;
    let guest = GraphKind::Ring { size };
    let host = GraphKind::Pancake { n };
    let map: Vec<(Vertex, Permutation)> = cycle
        .iter()
        .enumerate()
        .map(|(j, q)| (Vertex::Index(j as u64), q.clone()))
        .collect();
    let mut routes = Vec::with_capacity(size as usize);
    for (j, &g) in seq.indices().iter().enumerate() {
        let path = HostPath::from_vertices(&host, vec![cycle[j].clone(), cycle[j + 1].clone()])?;
        debug_assert_eq!(path.moves(), &[Move::Flip(g)]);
        routes.push(((Vertex::Index(j as u64), Vertex::Index(j as u64 + 1)), path));
    }
    // Closing edge, canonical endpoint order (0, size-1).
    let closing =
        HostPath::from_vertices(&host, vec![cycle[0].clone(), cycle.last().unwrap().clone()])?;
    debug_assert_eq!(closing.moves(), &[Move::Flip(k)]);
    routes.push(((Vertex::Index(0), Vertex::Index(size - 1)), closing));
    Embedding::from_parts(
        guest,
        host,
        Construction::RingCycle,
        map,
        Some(routes),
        Some(1),
        Some(1),
    )
}

/// Line of length `len` along the prefix of the Hamiltonian path of the
/// whole `n`-pancake.
pub fn embed_line(len: u64, n: usize) -> Result<Embedding> {
    if n < 2 {
        return Err(Error::InvalidDimension(n, "line embedding needs n >= 2"));
    }
    if len < 1 || len > factorial(n) {
        return Err(Error::GraphParameter(format!(
            "line length {len} out of range 1..={}",
            factorial(n)
        )));
    }
    let seq = pancake_sequence(n)?;
    let path: Vec<Permutation> = apply_gen_seq(&Permutation::identity(n)?, &seq)?
        .into_iter()
        .take(len as usize)
        .collect();
    let guest = GraphKind::Line { len };
    let host = GraphKind::Pancake { n };
    let map: Vec<(Vertex, Permutation)> = path
        .iter()
        .enumerate()
        .map(|(j, q)| (Vertex::Index(j as u64), q.clone()))
        .collect();
    let mut routes = Vec::new();
    for j in 0..path.len().saturating_sub(1) {
        let hop = HostPath::from_vertices(&host, vec![path[j].clone(), path[j + 1].clone()])?;
        routes.push(((Vertex::Index(j as u64), Vertex::Index(j as u64 + 1)), hop));
    }
    Embedding::from_parts(
        guest,
        host,
        Construction::LinePath,
        map,
        Some(routes),
        Some(1),
        Some(1),
    )
}

/// First row of the shift-based grid constructions: the Hamiltonian path
/// of the order-`p` subpancake from the identity.
fn first_row(p: usize, n: usize) -> Result<Vec<Permutation>> {
    apply_gen_seq(&Permutation::identity(n)?, &pancake_sequence(p)?)
}

/// The `n x (n-1)!` grid: row 0 is the first `(n-1)`-subpancake in
/// pancake-sequence order, row `i` applies `σ(n,i)` on the right.
/// A bijection onto the whole `n`-pancake. Measured dilation bound 7;
/// no constructive routing (verified by breadth-first measurement).
pub fn embed_grid_nfact(n: usize) -> Result<Embedding> {
    if n < 3 {
        return Err(Error::InvalidDimension(n, "grid embedding needs n >= 3"));
    }
    let row0 = first_row(n - 1, n)?;
    let cols = row0.len() as u64;
    let guest = GraphKind::Grid2d {
        rows: n as u64,
        cols,
    };
    let host = GraphKind::Pancake { n };
    let mut map = Vec::with_capacity((n as u64 * cols) as usize);
    for i in 0..n as u64 {
        let shift = CyclicShift::new(n, i as usize)?.word(n)?;
        for (j, pi_j) in row0.iter().enumerate() {
            map.push((Vertex::Coord(vec![i, j as u64]), pi_j.compose(&shift)?));
        }
    }
    Embedding::from_parts(
        guest,
        host,
        Construction::GridNFact,
        map,
        None,
        Some(7),
        None,
    )
}

/// Row shifts of the grid-family construction for parameters `(p, n)`:
/// no shift for row 0, then `σ(k,i)` blocks for `k = n` down to `p+1`,
/// `i = 1..k-1` within each block.
pub fn grid_family_shifts(p: usize, n: usize) -> Result<Vec<Option<CyclicShift>>> {
    if p < 2 || p + 1 > n {
        return Err(Error::GraphParameter(format!(
            "grid family needs 2 <= p <= n-1, got p={p}, n={n}"
        )));
    }
    let mut shifts: Vec<Option<CyclicShift>> = vec![None];
    for k in (p + 1..=n).rev() {
        for i in 1..k {
            shifts.push(Some(CyclicShift::new(k, i)?));
        }
    }
    Ok(shifts)
}

/// The `R x p!` grid family, `R = 1 + Σ_{k=p+1..n} (k-1)`: row 0 is the
/// order-`p` subpancake path, later rows apply the cyclic shifts
/// `σ(n,·), σ(n-1,·), …, σ(p+1,·)` to it. Declared dilation bound 4
/// (the block-boundary chain); verified by measurement.
pub fn embed_grid_family(p: usize, n: usize) -> Result<Embedding> {
    let shifts = grid_family_shifts(p, n)?;
    let row0 = first_row(p, n)?;
    let rows = shifts.len() as u64;
    let cols = row0.len() as u64;
    let guest = GraphKind::Grid2d { rows, cols };
    let host = GraphKind::Pancake { n };
    let mut map = Vec::with_capacity((rows * cols) as usize);
    for (i, shift) in shifts.iter().enumerate() {
        let word = match shift {
            None => Permutation::identity(n)?,
            Some(s) => s.word(n)?,
        };
        for (j, pi_j) in row0.iter().enumerate() {
            map.push((
                Vertex::Coord(vec![i as u64, j as u64]),
                pi_j.compose(&word)?,
            ));
        }
    }
    Embedding::from_parts(
        guest,
        host,
        Construction::GridFamily { p },
        map,
        None,
        Some(4),
        None,
    )
}

/// Routes every guest edge with the given constructive router, falling
/// back to a breadth-first shortest path (and logging the edge) if the
/// transcribed chain fails for some input.
fn route_all<F>(e: &mut Embedding, mut router: F) -> Result<()>
where
    F: FnMut(&Permutation, &Permutation) -> Result<HostPath>,
{
    let mut routes = Vec::new();
    let mut log = Vec::new();
    for (u, v) in e.guest.edges()? {
        let pu = e.image_of(&u)?.clone();
        let pv = e.image_of(&v)?.clone();
        let path = match router(&pu, &pv) {
            Ok(path) => path,
            Err(_) => {
                log.push((u.clone(), v.clone()));
                bfs_shortest_path(&e.host, &pu, &pv)?
            }
        };
        routes.push(((u, v), path));
    }
    e.routes = Some(routes);
    e.fallback_log = log;
    Ok(())
}

/// Mixed-radix grid into the `n`-pancake through the left-count coding;
/// a bijection with constructive routes of length at most 6.
pub fn embed_mixed_grid_pancake(n: usize) -> Result<Embedding> {
    if n < 3 {
        return Err(Error::InvalidDimension(
            n,
            "mixed grid embedding needs n >= 3",
        ));
    }
    let guest = GraphKind::MixedGrid { n };
    let host = GraphKind::Pancake { n };
    let map = label_map(n, left_count_decode)?;
    let mut e = Embedding::from_parts(
        guest,
        host,
        Construction::MixedGridPancake,
        map,
        None,
        Some(6),
        None,
    )?;
    route_all(&mut e, route_mixed_grid_pancake)?;
    Ok(e)
}

/// Mixed-radix grid into the `n`-star; routes of length at most 3.
pub fn embed_mixed_grid_star(n: usize) -> Result<Embedding> {
    if n < 3 {
        return Err(Error::InvalidDimension(
            n,
            "mixed grid embedding needs n >= 3",
        ));
    }
    let guest = GraphKind::MixedGrid { n };
    let host = GraphKind::Star { n };
    let map = label_map(n, left_count_decode)?;
    let mut e = Embedding::from_parts(
        guest,
        host,
        Construction::MixedGridStar,
        map,
        None,
        Some(3),
        None,
    )?;
    route_all(&mut e, route_mixed_grid_star)?;
    Ok(e)
}

/// Generalized hypercube into the `n`-pancake through the rule-R coding;
/// a bijection with constructive routes of length at most 8.
pub fn embed_ghc_pancake(n: usize) -> Result<Embedding> {
    if n < 3 {
        return Err(Error::InvalidDimension(n, "ghc embedding needs n >= 3"));
    }
    let guest = GraphKind::Ghc { n };
    let host = GraphKind::Pancake { n };
    let map = label_map(n, rule_r_decode)?;
    let mut e = Embedding::from_parts(
        guest,
        host,
        Construction::GhcPancake,
        map,
        None,
        Some(8),
        None,
    )?;
    route_all(&mut e, route_ghc_pancake)?;
    Ok(e)
}

/// Generalized hypercube into the `n`-star; routes of length at most 4.
pub fn embed_ghc_star(n: usize) -> Result<Embedding> {
    if n < 3 {
        return Err(Error::InvalidDimension(n, "ghc embedding needs n >= 3"));
    }
    let guest = GraphKind::Ghc { n };
    let host = GraphKind::Star { n };
    let map = label_map(n, rule_r_decode)?;
    let mut e =
        Embedding::from_parts(guest, host, Construction::GhcStar, map, None, Some(4), None)?;
    route_all(&mut e, route_ghc_star)?;
    Ok(e)
}

fn label_map(
    n: usize,
    decode: fn(&MixedRadixLabel) -> Result<Permutation>,
) -> Result<Vec<(Vertex, Permutation)>> {
    labels(n)
        .map(|l| Ok((Vertex::Label(l.clone()), decode(&l)?)))
        .collect()
}

/// Binary hypercube `Q_{n-1}` into the `n`-pancake: bit `b_i` of
/// coordinate `i = 2..n` becomes digit `a_i ∈ {0,1}`, so every bit flip
/// is a mixed-grid edge. Routes reuse the mixed-grid chain (length <= 6).
pub fn embed_hypercube_via_mixed_grid(n: usize) -> Result<Embedding> {
    if n < 3 {
        return Err(Error::InvalidDimension(
            n,
            "hypercube embedding needs n >= 3",
        ));
    }
    let d = n - 1;
    let guest = GraphKind::Hypercube { d };
    let host = GraphKind::Pancake { n };
    let mut map = Vec::with_capacity(1 << d);
    for v in 0..(1u64 << d) {
        let bits = bits_of(v, d);
        let label = MixedRadixLabel::new(bits.clone())?;
        map.push((Vertex::Bits(bits), left_count_decode(&label)?));
    }
    let mut e = Embedding::from_parts(
        guest,
        host,
        Construction::HypercubeMixedGrid,
        map,
        None,
        Some(6),
        None,
    )?;
    route_all(&mut e, route_mixed_grid_pancake)?;
    Ok(e)
}

/// Bit width assigned to coordinate `i` in the hypercube-to-GHC map.
fn ghc_bit_width(i: usize) -> usize {
    (i as u32).ilog2() as usize
}

/// Hypercube dimension `d = Σ_{i=2..n} ⌊lg i⌋` for the GHC route.
pub fn qd_dimension(n: usize) -> usize {
    (2..=n).map(ghc_bit_width).sum()
}

/// Binary hypercube `Q_d`, `d = Σ_{i=2..n} ⌊lg i⌋`, into the
/// `n`-pancake: reading the bit word left to right, coordinate `i` takes
/// the next `⌊lg i⌋` bits as a big-endian integer, giving a GHC label in
/// which every single-bit flip changes exactly one digit. Routes reuse
/// the GHC chain (length <= 8).
pub fn embed_qd_via_ghc(n: usize) -> Result<Embedding> {
    if n < 3 {
        return Err(Error::InvalidDimension(
            n,
            "hypercube embedding needs n >= 3",
        ));
    }
    let d = qd_dimension(n);
    let guest = GraphKind::Hypercube { d };
    let host = GraphKind::Pancake { n };
    let mut map = Vec::with_capacity(1 << d);
    for v in 0..(1u64 << d) {
        let bits = bits_of(v, d);
        map.push((
            Vertex::Bits(bits.clone()),
            rule_r_decode(&ghc_label_of_bits(&bits, n)?)?,
        ));
    }
    let mut e = Embedding::from_parts(
        guest,
        host,
        Construction::HypercubeGhc,
        map,
        None,
        Some(8),
        None,
    )?;
    route_all(&mut e, route_ghc_pancake)?;
    Ok(e)
}

/// Groups a bit word into a GHC label, ascending coordinate order, most
/// significant bit first within each group.
pub fn ghc_label_of_bits(bits: &[u8], n: usize) -> Result<MixedRadixLabel> {
    let mut digits = Vec::with_capacity(n - 1);
    let mut t = 0;
    for i in 2..=n {
        let w = ghc_bit_width(i);
        let mut v = 0u8;
        for _ in 0..w {
            v = (v << 1) | bits[t];
            t += 1;
        }
        digits.push(v);
    }
    if t != bits.len() {
        return Err(Error::GraphParameter(format!(
            "bit word length {} does not match dimension {}",
            bits.len(),
            t
        )));
    }
    MixedRadixLabel::new(digits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::representation::left_count_encode;
    use crate::routing::validate_path;
    use std::collections::HashSet;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn pancake_sequence_examples() {
        assert_eq!(pancake_sequence(2).unwrap().indices(), &[2]);
        assert_eq!(pancake_sequence(3).unwrap().indices(), &[2, 3, 2, 3, 2]);
        assert_eq!(pancake_sequence(4).unwrap().len(), 23);
        assert_eq!(pancake_sequence(6).unwrap().len(), 719);
        assert!(pancake_sequence(1).is_err());
    }

    #[test]
    fn hamiltonian_cycle_order_three() {
        let cycle = hamiltonian_cycle(&Permutation::identity(3).unwrap(), 3).unwrap();
        let expected: Vec<Permutation> = ["123", "213", "312", "132", "231", "321"]
            .iter()
            .map(|s| p(s))
            .collect();
        assert_eq!(cycle, expected);
    }

    /// The published vertex order of the 4-pancake along its pancake
    /// sequence.
    pub const ORDER_FOUR_CYCLE: [&str; 24] = [
        "1234", "2134", "3124", "1324", "2314", "3214", "4123", "1423", "2413", "4213", "1243",
        "2143", "3412", "4312", "1342", "3142", "4132", "1432", "2341", "3241", "4231", "2431",
        "3421", "4321",
    ];

    #[test]
    fn hamiltonian_cycle_order_four() {
        let cycle = hamiltonian_cycle(&Permutation::identity(4).unwrap(), 4).unwrap();
        let expected: Vec<Permutation> = ORDER_FOUR_CYCLE.iter().map(|s| p(s)).collect();
        assert_eq!(cycle, expected);
    }

    #[test]
    fn hamiltonian_cycle_in_subpancake() {
        // Starting inside P_3(2341): six distinct entries, all ending in 1.
        let cycle = hamiltonian_cycle(&p("2341"), 3).unwrap();
        assert_eq!(cycle.len(), 6);
        let distinct: HashSet<_> = cycle.iter().collect();
        assert_eq!(distinct.len(), 6);
        for q in &cycle {
            assert_eq!(q.last_symbol(), 1);
        }
        assert!(hamiltonian_cycle(&p("123"), 2).is_err());
        assert!(hamiltonian_cycle(&p("123"), 4).is_err());
    }

    #[test]
    fn ring_embedding() {
        let e = embed_ring(3, 4).unwrap();
        assert_eq!(e.guest(), GraphKind::Ring { size: 6 });
        let images: Vec<&Permutation> = e.map().iter().map(|(_, q)| q).collect();
        assert_eq!(
            images,
            ["1234", "2134", "3124", "1324", "2314", "3214"]
                .iter()
                .map(|s| p(s))
                .collect::<Vec<_>>()
                .iter()
                .collect::<Vec<_>>()
        );
        assert_eq!(e.expansion().unwrap(), (4, 1));
        e.validate().unwrap();
        let routes = e.routes().unwrap();
        assert_eq!(routes.len(), 6);
        for (_, path) in routes {
            assert_eq!(path.len(), 1);
            assert!(validate_path(path, &e.host()).is_pass());
        }

        let full = embed_ring(4, 4).unwrap();
        assert_eq!(full.guest(), GraphKind::Ring { size: 24 });
        assert_eq!(full.expansion().unwrap(), (1, 1));
        full.validate().unwrap();

        assert!(embed_ring(2, 4).is_err());
        assert!(embed_ring(5, 4).is_err());
    }

    #[test]
    fn line_embedding() {
        let e = embed_line(7, 4).unwrap();
        let images: Vec<String> = e.map().iter().map(|(_, q)| q.to_string()).collect();
        assert_eq!(images, &ORDER_FOUR_CYCLE[..7]);
        e.validate().unwrap();

        let single = embed_line(1, 4).unwrap();
        assert_eq!(single.map().len(), 1);
        assert!(single.routes().unwrap().is_empty());
        single.validate().unwrap();

        let full = embed_line(24, 4).unwrap();
        assert_eq!(full.map().len(), 24);
        full.validate().unwrap();

        assert!(embed_line(25, 4).is_err());
        assert!(embed_line(0, 4).is_err());
    }

    #[test]
    fn grid_nfact_structure() {
        let e = embed_grid_nfact(4).unwrap();
        assert_eq!(e.guest(), GraphKind::Grid2d { rows: 4, cols: 6 });
        assert_eq!(
            e.image_of(&Vertex::Coord(vec![0, 0])).unwrap(),
            &Permutation::identity(4).unwrap()
        );
        assert_eq!(e.image_of(&Vertex::Coord(vec![1, 0])).unwrap(), &p("4123"));
        e.validate().unwrap();

        // Bijection for n = 4 and 5.
        for n in [4usize, 5] {
            let e = embed_grid_nfact(n).unwrap();
            let images: HashSet<_> = e.map().iter().map(|(_, q)| q.clone()).collect();
            assert_eq!(images.len() as u64, factorial(n));
        }
        assert!(embed_grid_nfact(2).is_err());
    }

    #[test]
    fn grid_family_structure() {
        // p = 2, n = 4: rows 1 + 3 + 2 = 6, columns 2! = 2.
        let e = embed_grid_family(2, 4).unwrap();
        assert_eq!(e.guest(), GraphKind::Grid2d { rows: 6, cols: 2 });
        let images: HashSet<_> = e.map().iter().map(|(_, q)| q.clone()).collect();
        assert_eq!(images.len(), 12);
        e.validate().unwrap();
        // Row 4 is the first σ(3,·) row.
        let pi0 = Permutation::identity(4).unwrap();
        let expected = pi0
            .compose(&CyclicShift::new(3, 1).unwrap().word(4).unwrap())
            .unwrap();
        assert_eq!(e.image_of(&Vertex::Coord(vec![4, 0])).unwrap(), &expected);

        // p = n-1 coincides with the n x (n-1)! construction.
        for n in [4usize, 5] {
            let family = embed_grid_family(n - 1, n).unwrap();
            let nfact = embed_grid_nfact(n).unwrap();
            assert_eq!(family.map(), nfact.map());
        }

        assert!(embed_grid_family(1, 4).is_err());
        assert!(embed_grid_family(4, 4).is_err());
    }

    #[test]
    fn mixed_grid_embeddings() {
        let e = embed_mixed_grid_pancake(5).unwrap();
        assert_eq!(
            e.image_of(&Vertex::Label("1234".parse().unwrap())).unwrap(),
            &p("12345")
        );
        assert_eq!(
            e.image_of(&Vertex::Label("0000".parse().unwrap())).unwrap(),
            &p("54321")
        );
        assert_eq!(e.expansion().unwrap(), (1, 1));
        assert!(e.fallback_log().is_empty());
        e.validate().unwrap();
        for (_, path) in e.routes().unwrap() {
            assert!(path.len() <= 6);
        }

        let s = embed_mixed_grid_star(5).unwrap();
        assert_eq!(
            s.image_of(&Vertex::Label("0203".parse().unwrap())).unwrap(),
            &p("42153")
        );
        let images: HashSet<_> = s.map().iter().map(|(_, q)| q.clone()).collect();
        assert_eq!(images.len(), 120);
        assert!(s.fallback_log().is_empty());
        s.validate().unwrap();
        for (_, path) in s.routes().unwrap() {
            assert!(path.len() <= 3);
        }
    }

    #[test]
    fn ghc_embeddings() {
        // The worked n=8 value holds for the vertex map (checked through
        // the coding directly; building all of P_8's routes is wasteful).
        assert_eq!(
            rule_r_decode(&"0200353".parse().unwrap()).unwrap(),
            p("27351864")
        );
        let e5 = embed_ghc_pancake(5).unwrap();
        let images: HashSet<_> = e5.map().iter().map(|(_, q)| q.clone()).collect();
        assert_eq!(images.len(), 120);
        assert!(e5.fallback_log().is_empty());
        e5.validate().unwrap();
        for (_, path) in e5.routes().unwrap() {
            assert!(path.len() <= 8);
        }

        let s5 = embed_ghc_star(5).unwrap();
        let identity_label = Vertex::Label("1234".parse().unwrap());
        assert_eq!(
            s5.image_of(&identity_label).unwrap(),
            &Permutation::identity(5).unwrap()
        );
        assert!(s5.fallback_log().is_empty());
        s5.validate().unwrap();
        for (_, path) in s5.routes().unwrap() {
            assert!(path.len() <= 4);
        }
    }

    #[test]
    fn hypercube_via_mixed_grid() {
        let e = embed_hypercube_via_mixed_grid(5).unwrap();
        assert_eq!(e.guest(), GraphKind::Hypercube { d: 4 });
        assert_eq!(
            e.image_of(&Vertex::Bits(vec![0, 0, 0, 0])).unwrap(),
            &p("54321")
        );
        // Bit for coordinate 2 is the leading bit of the word.
        let label = MixedRadixLabel::new(vec![1, 0, 0, 0]).unwrap();
        assert_eq!(
            e.image_of(&Vertex::Bits(vec![1, 0, 0, 0])).unwrap(),
            &left_count_decode(&label).unwrap()
        );
        e.validate().unwrap();

        let q3 = embed_hypercube_via_mixed_grid(4).unwrap();
        assert_eq!(q3.guest(), GraphKind::Hypercube { d: 3 });
        let images: HashSet<_> = q3.map().iter().map(|(_, q)| q.clone()).collect();
        assert_eq!(images.len(), 8);
        assert_eq!(q3.expansion().unwrap(), (3, 1));
        assert!(q3.fallback_log().is_empty());
        q3.validate().unwrap();

        // Every hypercube edge is a mixed-grid edge of the labels.
        for (u, v) in q3.guest().edges().unwrap() {
            let (Vertex::Bits(a), Vertex::Bits(b)) = (&u, &v) else {
                unreachable!()
            };
            let la = left_count_encode(q3.image_of(&Vertex::Bits(a.clone())).unwrap()).unwrap();
            let lb = left_count_encode(q3.image_of(&Vertex::Bits(b.clone())).unwrap()).unwrap();
            let diff = la.differing_coords(&lb);
            assert_eq!(diff.len(), 1);
            assert_eq!(la.digit(diff[0]).abs_diff(lb.digit(diff[0])), 1);
        }
    }

    #[test]
    fn hypercube_via_ghc() {
        assert_eq!(qd_dimension(4), 4);
        assert_eq!(qd_dimension(5), 6);

        let e = embed_qd_via_ghc(4).unwrap();
        assert_eq!(e.guest(), GraphKind::Hypercube { d: 4 });
        let images: HashSet<_> = e.map().iter().map(|(_, q)| q.clone()).collect();
        assert_eq!(images.len(), 16);
        assert_eq!(e.expansion().unwrap(), (3, 2));
        assert!(e.fallback_log().is_empty());
        e.validate().unwrap();

        // All-zero bits decode the all-zero label.
        assert_eq!(
            e.image_of(&Vertex::Bits(vec![0; 4])).unwrap(),
            &rule_r_decode(&MixedRadixLabel::zero(4).unwrap()).unwrap()
        );

        // Each bit flip changes exactly one GHC digit.
        for (u, v) in e.guest().edges().unwrap() {
            let (Vertex::Bits(a), Vertex::Bits(b)) = (&u, &v) else {
                unreachable!()
            };
            let la = ghc_label_of_bits(a, 4).unwrap();
            let lb = ghc_label_of_bits(b, 4).unwrap();
            assert_eq!(la.differing_coords(&lb).len(), 1);
        }

        let e5 = embed_qd_via_ghc(5).unwrap();
        let images: HashSet<_> = e5.map().iter().map(|(_, q)| q.clone()).collect();
        assert_eq!(images.len(), 64);
        e5.validate().unwrap();
    }

    #[test]
    fn all_constructions_validate_through_n6() {
        // Full structural validation (injectivity, coverage, route
        // endpoints and adjacency) for every parameter choice up to n=6.
        for n in 3..=6 {
            for k in 3..=n {
                embed_ring(k, n).unwrap().validate().unwrap();
            }
            for len in [1, 2, factorial(n) / 2, factorial(n)] {
                embed_line(len, n).unwrap().validate().unwrap();
            }
            embed_grid_nfact(n).unwrap().validate().unwrap();
            for p in 2..n {
                embed_grid_family(p, n).unwrap().validate().unwrap();
            }
            embed_mixed_grid_pancake(n).unwrap().validate().unwrap();
            embed_mixed_grid_star(n).unwrap().validate().unwrap();
            embed_hypercube_via_mixed_grid(n)
                .unwrap()
                .validate()
                .unwrap();
            embed_ghc_pancake(n).unwrap().validate().unwrap();
            embed_ghc_star(n).unwrap().validate().unwrap();
            embed_qd_via_ghc(n).unwrap().validate().unwrap();
        }
    }

    #[test]
    fn no_guest_square_maps_to_host_square() {
        // The host has no 4-cycles, so no grid square may land on one.
        let e = embed_grid_nfact(4).unwrap();
        let host = e.host();
        if let GraphKind::Grid2d { rows, cols } = e.guest() {
            for i in 0..rows - 1 {
                for j in 0..cols - 1 {
                    let square = [
                        Vertex::Coord(vec![i, j]),
                        Vertex::Coord(vec![i, j + 1]),
                        Vertex::Coord(vec![i + 1, j + 1]),
                        Vertex::Coord(vec![i + 1, j]),
                    ];
                    let imgs: Vec<_> = square
                        .iter()
                        .map(|v| e.image_of(v).unwrap().clone())
                        .collect();
                    let all_adjacent = (0..4).all(|t| {
                        host.are_adjacent(
                            &Vertex::Perm(imgs[t].clone()),
                            &Vertex::Perm(imgs[(t + 1) % 4].clone()),
                        )
                        .unwrap()
                    });
                    assert!(!all_adjacent, "square at ({i},{j}) mapped onto a 4-cycle");
                }
            }
        } else {
            panic!("unexpected guest kind");
        }
    }
}
