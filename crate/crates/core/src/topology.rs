//! Implicit graph definitions for host networks (pancake, star) and guest
//! networks (ring, line, 2-D grid, mixed-radix grid, binary hypercube,
//! generalized hypercube).
//!
//! Adjacency is computed on demand; explicit edge lists are materialized
//! only by exporters. Edges enumerate each undirected pair exactly once
//! with the lexicographically smaller endpoint first, so downstream
//! congestion counting is deterministic.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::perm::{factorial, Permutation, MAX_N};
use crate::representation::MixedRadixLabel;

/// A parameterized graph family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GraphKind {
    /// Pancake network `P_n`: Cayley graph of `S_n` under prefix reversals.
    Pancake { n: usize },
    /// Star network: Cayley graph of `S_n` under position-1 transpositions.
    Star { n: usize },
    /// Cycle on `size` vertices, `size >= 3`.
    Ring { size: u64 },
    /// Path on `len` vertices.
    Line { len: u64 },
    /// `rows x cols` mesh (no wraparound).
    Grid2d { rows: u64, cols: u64 },
    /// Mixed-radix grid on labels `a_2…a_n`: edges change one digit by 1.
    MixedGrid { n: usize },
    /// Binary hypercube `Q_d`: bit words with Hamming-distance-1 edges.
    Hypercube { d: usize },
    /// Generalized hypercube on labels `a_2…a_n`: edges change one digit
    /// by any amount (complete graph per dimension).
    Ghc { n: usize },
}

/// A vertex of any [`GraphKind`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Vertex {
    Perm(Permutation),
    Index(u64),
    Coord(Vec<u64>),
    Label(MixedRadixLabel),
    Bits(Vec<u8>),
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Vertex::Perm(p) => write!(f, "{p}"),
            Vertex::Index(i) => write!(f, "{i}"),
            Vertex::Coord(c) => {
                let parts: Vec<String> = c.iter().map(|x| x.to_string()).collect();
                write!(f, "({})", parts.join(","))
            }
            Vertex::Label(l) => write!(f, "{l}"),
            Vertex::Bits(b) => {
                for &bit in b {
                    write!(f, "{bit}")?;
                }
                Ok(())
            }
        }
    }
}

impl GraphKind {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::GraphParameter(msg));
        match *self {
            GraphKind::Pancake { n } | GraphKind::Star { n } => {
                if !(2..=MAX_N).contains(&n) {
                    return bad(format!("{self}: need 2 <= n <= {MAX_N}"));
                }
            }
            GraphKind::Ring { size } => {
                if size < 3 {
                    return bad(format!("{self}: ring needs size >= 3"));
                }
            }
            GraphKind::Line { len } => {
                if len < 1 {
                    return bad(format!("{self}: line needs length >= 1"));
                }
            }
            GraphKind::Grid2d { rows, cols } => {
                if rows < 1 || cols < 1 {
                    return bad(format!("{self}: grid extents must be >= 1"));
                }
            }
            GraphKind::MixedGrid { n } | GraphKind::Ghc { n } => {
                if !(2..=MAX_N).contains(&n) {
                    return bad(format!("{self}: need 2 <= n <= {MAX_N}"));
                }
            }
            GraphKind::Hypercube { d } => {
                if !(1..=62).contains(&d) {
                    return bad(format!("{self}: need 1 <= d <= 62"));
                }
            }
        }
        Ok(())
    }

    pub fn is_host(&self) -> bool {
        matches!(self, GraphKind::Pancake { .. } | GraphKind::Star { .. })
    }

    pub fn vertex_count(&self) -> Result<u64> {
        self.validate()?;
        Ok(match *self {
            GraphKind::Pancake { n } | GraphKind::Star { n } => factorial(n),
            GraphKind::Ring { size } => size,
            GraphKind::Line { len } => len,
            GraphKind::Grid2d { rows, cols } => rows * cols,
            GraphKind::MixedGrid { n } | GraphKind::Ghc { n } => factorial(n),
            GraphKind::Hypercube { d } => 1u64 << d,
        })
    }

    pub fn edge_count(&self) -> Result<u64> {
        self.validate()?;
        Ok(match *self {
            GraphKind::Pancake { n } | GraphKind::Star { n } => factorial(n) * (n as u64 - 1) / 2,
            GraphKind::Ring { size } => size,
            GraphKind::Line { len } => len - 1,
            GraphKind::Grid2d { rows, cols } => rows * (cols - 1) + cols * (rows - 1),
            GraphKind::MixedGrid { n } => {
                (2..=n as u64).map(|i| (factorial(n) / i) * (i - 1)).sum()
            }
            GraphKind::Ghc { n } => (2..=n as u64)
                .map(|i| (factorial(n) / i) * i * (i - 1) / 2)
                .sum(),
            GraphKind::Hypercube { d } => (1u64 << (d - 1)) * d as u64,
        })
    }

    /// Enumerates every vertex exactly once, in the canonical order used
    /// by embedding maps and file formats.
    pub fn vertices(&self) -> Result<Box<dyn Iterator<Item = Vertex>>> {
        self.validate()?;
        Ok(match *self {
            GraphKind::Pancake { n } | GraphKind::Star { n } => Box::new(
                (0..factorial(n))
                    .map(move |r| Vertex::Perm(Permutation::from_lex_rank(n, r).unwrap())),
            ),
            GraphKind::Ring { size } => Box::new((0..size).map(Vertex::Index)),
            GraphKind::Line { len } => Box::new((0..len).map(Vertex::Index)),
            GraphKind::Grid2d { rows, cols } => Box::new(
                (0..rows).flat_map(move |i| (0..cols).map(move |j| Vertex::Coord(vec![i, j]))),
            ),
            GraphKind::MixedGrid { n } | GraphKind::Ghc { n } => {
                Box::new(labels(n).map(Vertex::Label))
            }
            GraphKind::Hypercube { d } => {
                Box::new((0..(1u64 << d)).map(move |v| Vertex::Bits(bits_of(v, d))))
            }
        })
    }

    /// Enumerates each undirected edge exactly once, endpoints in
    /// canonical (lexicographically smaller first) order.
    pub fn edges(&self) -> Result<Box<dyn Iterator<Item = (Vertex, Vertex)>>> {
        self.validate()?;
        Ok(match *self {
            GraphKind::Pancake { n } => Box::new((0..factorial(n)).flat_map(move |r| {
                let p = Permutation::from_lex_rank(n, r).unwrap();
                let out: Vec<(Vertex, Vertex)> = pancake_neighbors(&p)
                    .unwrap()
                    .into_iter()
                    .filter(|q| *q > p)
                    .map(|q| (Vertex::Perm(p.clone()), Vertex::Perm(q)))
                    .collect();
                out
            })),
            GraphKind::Star { n } => Box::new((0..factorial(n)).flat_map(move |r| {
                let p = Permutation::from_lex_rank(n, r).unwrap();
                let out: Vec<(Vertex, Vertex)> = star_neighbors(&p)
                    .unwrap()
                    .into_iter()
                    .filter(|q| *q > p)
                    .map(|q| (Vertex::Perm(p.clone()), Vertex::Perm(q)))
                    .collect();
                out
            })),
            GraphKind::Ring { size } => Box::new(
                (0..size - 1)
                    .map(|j| (Vertex::Index(j), Vertex::Index(j + 1)))
                    .chain(std::iter::once((Vertex::Index(0), Vertex::Index(size - 1)))),
            ),
            GraphKind::Line { len } => {
                Box::new((0..len - 1).map(|j| (Vertex::Index(j), Vertex::Index(j + 1))))
            }
            GraphKind::Grid2d { rows, cols } => Box::new((0..rows).flat_map(move |i| {
                (0..cols).flat_map(move |j| {
                    let mut out = Vec::with_capacity(2);
                    if j + 1 < cols {
                        out.push((Vertex::Coord(vec![i, j]), Vertex::Coord(vec![i, j + 1])));
                    }
                    if i + 1 < rows {
                        out.push((Vertex::Coord(vec![i, j]), Vertex::Coord(vec![i + 1, j])));
                    }
                    out
                })
            })),
            GraphKind::MixedGrid { n } => Box::new(labels(n).flat_map(move |l| {
                let mut out = Vec::new();
                for i in 2..=n {
                    let a = l.digit(i);
                    if (a as usize) < i - 1 {
                        out.push((
                            Vertex::Label(l.clone()),
                            Vertex::Label(l.with_digit(i, a + 1).unwrap()),
                        ));
                    }
                }
                out
            })),
            GraphKind::Ghc { n } => Box::new(labels(n).flat_map(move |l| {
                let mut out = Vec::new();
                for i in 2..=n {
                    let a = l.digit(i);
                    for v in a + 1..i as u8 {
                        out.push((
                            Vertex::Label(l.clone()),
                            Vertex::Label(l.with_digit(i, v).unwrap()),
                        ));
                    }
                }
                out
            })),
            GraphKind::Hypercube { d } => Box::new((0..(1u64 << d)).flat_map(move |v| {
                let bits = bits_of(v, d);
                let mut out = Vec::new();
                for t in 0..d {
                    if bits[t] == 0 {
                        let mut other = bits.clone();
                        other[t] = 1;
                        out.push((Vertex::Bits(bits.clone()), Vertex::Bits(other)));
                    }
                }
                out
            })),
        })
    }

    /// Adjacency test for vertices of this graph.
    pub fn are_adjacent(&self, u: &Vertex, v: &Vertex) -> Result<bool> {
        self.validate()?;
        let mismatch = || {
            Err(Error::GraphParameter(format!(
                "vertex does not belong to {self}"
            )))
        };
        match (*self, u, v) {
            (GraphKind::Pancake { n }, Vertex::Perm(a), Vertex::Perm(b)) => {
                if a.n() != n || b.n() != n {
                    return mismatch();
                }
                if a == b {
                    return Ok(false);
                }
                let i = a.position_of(b.symbol_at(1));
                Ok(i >= 2 && &a.prefix_reverse(i)? == b)
            }
            (GraphKind::Star { n }, Vertex::Perm(a), Vertex::Perm(b)) => {
                if a.n() != n || b.n() != n {
                    return mismatch();
                }
                if a == b {
                    return Ok(false);
                }
                let i = a.position_of(b.symbol_at(1));
                Ok(i >= 2 && &a.star_swap(i)? == b)
            }
            (GraphKind::Ring { size }, Vertex::Index(a), Vertex::Index(b)) => {
                if *a >= size || *b >= size {
                    return mismatch();
                }
                let d = a.abs_diff(*b);
                Ok(d == 1 || d == size - 1)
            }
            (GraphKind::Line { len }, Vertex::Index(a), Vertex::Index(b)) => {
                if *a >= len || *b >= len {
                    return mismatch();
                }
                Ok(a.abs_diff(*b) == 1)
            }
            (GraphKind::Grid2d { rows, cols }, Vertex::Coord(a), Vertex::Coord(b)) => {
                if a.len() != 2
                    || b.len() != 2
                    || a[0] >= rows
                    || b[0] >= rows
                    || a[1] >= cols
                    || b[1] >= cols
                {
                    return mismatch();
                }
                let dr = a[0].abs_diff(b[0]);
                let dc = a[1].abs_diff(b[1]);
                Ok(dr + dc == 1)
            }
            (GraphKind::MixedGrid { n }, Vertex::Label(a), Vertex::Label(b)) => {
                if a.n() != n || b.n() != n {
                    return mismatch();
                }
                let diff = a.differing_coords(b);
                Ok(diff.len() == 1 && a.digit(diff[0]).abs_diff(b.digit(diff[0])) == 1)
            }
            (GraphKind::Ghc { n }, Vertex::Label(a), Vertex::Label(b)) => {
                if a.n() != n || b.n() != n {
                    return mismatch();
                }
                Ok(a.differing_coords(b).len() == 1)
            }
            (GraphKind::Hypercube { d }, Vertex::Bits(a), Vertex::Bits(b)) => {
                if a.len() != d || b.len() != d {
                    return mismatch();
                }
                Ok(a.iter().zip(b.iter()).filter(|(x, y)| x != y).count() == 1)
            }
            _ => mismatch(),
        }
    }

    /// Parses a vertex of this graph from its textual form.
    pub fn parse_vertex(&self, s: &str) -> Result<Vertex> {
        self.validate()?;
        let s = s.trim();
        match *self {
            GraphKind::Pancake { n } | GraphKind::Star { n } => {
                let p: Permutation = s.parse()?;
                if p.n() != n {
                    return Err(Error::Parse(format!("expected n={n}, got {}", p.n())));
                }
                Ok(Vertex::Perm(p))
            }
            GraphKind::Ring { size } => parse_index(s, size).map(Vertex::Index),
            GraphKind::Line { len } => parse_index(s, len).map(Vertex::Index),
            GraphKind::Grid2d { rows, cols } => {
                let inner = s
                    .strip_prefix('(')
                    .and_then(|t| t.strip_suffix(')'))
                    .ok_or_else(|| Error::Parse(format!("expected (row,col), got {s:?}")))?;
                let parts: Vec<&str> = inner.split(',').collect();
                if parts.len() != 2 {
                    return Err(Error::Parse(format!("expected (row,col), got {s:?}")));
                }
                let i = parse_index(parts[0], rows)?;
                let j = parse_index(parts[1], cols)?;
                Ok(Vertex::Coord(vec![i, j]))
            }
            GraphKind::MixedGrid { n } | GraphKind::Ghc { n } => {
                let l: MixedRadixLabel = s.parse()?;
                if l.n() != n {
                    return Err(Error::Parse(format!("expected n={n}, got {}", l.n())));
                }
                Ok(Vertex::Label(l))
            }
            GraphKind::Hypercube { d } => {
                if s.len() != d {
                    return Err(Error::Parse(format!("expected {d} bits, got {s:?}")));
                }
                let bits: Vec<u8> = s
                    .chars()
                    .map(|c| match c {
                        '0' => Ok(0),
                        '1' => Ok(1),
                        _ => Err(Error::Parse(format!("bad bit {c:?}"))),
                    })
                    .collect::<Result<_>>()?;
                Ok(Vertex::Bits(bits))
            }
        }
    }
}

fn parse_index(s: &str, bound: u64) -> Result<u64> {
    let v: u64 = s
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad index {s:?}")))?;
    if v >= bound {
        return Err(Error::Parse(format!("index {v} out of range 0..{bound}")));
    }
    Ok(v)
}

impl fmt::Display for GraphKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GraphKind::Pancake { n } => write!(f, "pancake({n})"),
            GraphKind::Star { n } => write!(f, "star({n})"),
            GraphKind::Ring { size } => write!(f, "ring({size})"),
            GraphKind::Line { len } => write!(f, "line({len})"),
            GraphKind::Grid2d { rows, cols } => write!(f, "grid2d({rows}x{cols})"),
            GraphKind::MixedGrid { n } => write!(f, "mixed_grid({n})"),
            GraphKind::Hypercube { d } => write!(f, "hypercube({d})"),
            GraphKind::Ghc { n } => write!(f, "ghc({n})"),
        }
    }
}

impl FromStr for GraphKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (name, rest) = s
            .split_once('(')
            .ok_or_else(|| Error::Parse(format!("expected kind(params), got {s:?}")))?;
        let params = rest
            .strip_suffix(')')
            .ok_or_else(|| Error::Parse(format!("missing ')' in {s:?}")))?;
        let num = |t: &str| -> Result<u64> {
            t.trim()
                .parse::<u64>()
                .map_err(|_| Error::Parse(format!("bad parameter {t:?} in {s:?}")))
        };
        let kind = match name.trim() {
            "pancake" => GraphKind::Pancake {
                n: num(params)? as usize,
            },
            "star" => GraphKind::Star {
                n: num(params)? as usize,
            },
            "ring" => GraphKind::Ring { size: num(params)? },
            "line" => GraphKind::Line { len: num(params)? },
            "grid2d" => {
                let parts: Vec<&str> = params.split('x').collect();
                if parts.len() != 2 {
                    return Err(Error::Parse(format!("expected grid2d(RxC), got {s:?}")));
                }
                GraphKind::Grid2d {
                    rows: num(parts[0])?,
                    cols: num(parts[1])?,
                }
            }
            "mixed_grid" | "mixed-grid" => GraphKind::MixedGrid {
                n: num(params)? as usize,
            },
            "hypercube" => GraphKind::Hypercube {
                d: num(params)? as usize,
            },
            "ghc" => GraphKind::Ghc {
                n: num(params)? as usize,
            },
            other => return Err(Error::Parse(format!("unknown graph kind {other:?}"))),
        };
        kind.validate()?;
        Ok(kind)
    }
}

/// The `n-1` prefix reversals of `p`, in ascending generator order.
pub fn pancake_neighbors(p: &Permutation) -> Result<Vec<Permutation>> {
    let n = p.n();
    if n < 2 {
        return Err(Error::InvalidDimension(n, "pancake needs n >= 2"));
    }
    (2..=n).map(|i| p.prefix_reverse(i)).collect()
}

/// The `n-1` position-1 transpositions of `p`, in ascending position order.
pub fn star_neighbors(p: &Permutation) -> Result<Vec<Permutation>> {
    let n = p.n();
    if n < 2 {
        return Err(Error::InvalidDimension(n, "star needs n >= 2"));
    }
    (2..=n).map(|i| p.star_swap(i)).collect()
}

/// Identifier of the subpancake `P_{n-1,i}` a vertex belongs to: its last
/// symbol.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SubpancakeId(pub u8);

pub fn subpancake_of(p: &Permutation) -> Result<SubpancakeId> {
    if p.n() < 2 {
        return Err(Error::InvalidDimension(p.n(), "subpancakes need n >= 2"));
    }
    Ok(SubpancakeId(p.last_symbol()))
}

/// All mixed-radix labels for dimension `n` in ascending lexicographic
/// order (`a_2` most significant).
pub fn labels(n: usize) -> impl Iterator<Item = MixedRadixLabel> {
    LabelIter {
        next: Some(vec![0; n - 1]),
    }
}

struct LabelIter {
    next: Option<Vec<u8>>,
}

impl Iterator for LabelIter {
    type Item = MixedRadixLabel;

    fn next(&mut self) -> Option<MixedRadixLabel> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        // Odometer increment, last digit fastest; radix of slot j is j+2.
        let mut idx = succ.len();
        loop {
            if idx == 0 {
                self.next = None;
                break;
            }
            idx -= 1;
            let radix = (idx + 2) as u8;
            if succ[idx] + 1 < radix {
                succ[idx] += 1;
                self.next = Some(succ);
                break;
            }
            succ[idx] = 0;
        }
        Some(MixedRadixLabel::new(current).unwrap())
    }
}

/// Bit word of `v` with `d` bits, most significant bit first.
pub fn bits_of(v: u64, d: usize) -> Vec<u8> {
    (0..d).map(|t| ((v >> (d - 1 - t)) & 1) as u8).collect()
}
