//! Aggregated verification: one row per measurable claim per dimension,
//! with the measured value against its declared bound.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::embedding::{embed_ghc_pancake, embed_ghc_star, embed_grid_family, embed_grid_nfact};
use crate::error::Result;
use crate::perm::{factorial, CyclicShift, Permutation};
use crate::representation::{
    diff3_decompose, left_count_decode, left_count_encode, rule_r_decode, rule_r_encode,
};
use crate::routing::{route_grid_family_step, route_sigma, validate_path};
use crate::topology::{labels, GraphKind};
use crate::verify::{
    bfs_distance_between, bfs_from_identity_with_cap, cayley_distance, check_generator_identity,
    check_hamiltonian, check_no_4cycle, measure, DistanceTable,
};

pub const DEFAULT_SEED: u64 = 1729;

/// One verified claim at one dimension.
#[derive(Clone, Debug, Serialize)]
pub struct ClaimRow {
    pub claim: String,
    pub n: usize,
    pub measured: String,
    pub bound: String,
    pub pass: bool,
}

impl ClaimRow {
    fn new(claim: &str, n: usize, measured: String, bound: &str, pass: bool) -> Self {
        Self {
            claim: claim.to_string(),
            n,
            measured,
            bound: bound.to_string(),
            pass,
        }
    }
}

/// Runs every claim for each `n` in `lo..=hi`. Dimensions above `cap`
/// are refused (the tables would not fit the desk-scale guarantee).
pub fn run_suite(lo: usize, hi: usize, seed: u64, cap: usize) -> Result<Vec<ClaimRow>> {
    if lo < 3 || hi < lo {
        return Err(crate::error::Error::GraphParameter(format!(
            "suite range {lo}..={hi} invalid (need 3 <= lo <= hi)"
        )));
    }
    if hi > cap {
        return Err(crate::error::Error::DimensionCapExceeded { n: hi, cap });
    }
    let mut rows = Vec::new();
    for n in lo..=hi {
        run_dimension(n, seed, cap, &mut rows)?;
    }
    Ok(rows)
}

fn run_dimension(n: usize, seed: u64, cap: usize, rows: &mut Vec<ClaimRow>) -> Result<()> {
    let pancake = GraphKind::Pancake { n };
    let star = GraphKind::Star { n };
    let pan_table = bfs_from_identity_with_cap(&pancake, cap)?;
    let star_table = bfs_from_identity_with_cap(&star, cap)?;

    // Alternating generator identity.
    let ok = check_generator_identity(n)?;
    rows.push(ClaimRow::new(
        "generator identity (g_i g_{i+1})^{i+1} = I",
        n,
        if ok { "closes".into() } else { "fails".into() },
        "closes",
        ok,
    ));

    // Hamiltonian cycles of every order.
    let mut ham_ok = true;
    let id = Permutation::identity(n)?;
    for k in 3..=n {
        if !check_hamiltonian(&id, k)?.is_pass() {
            ham_ok = false;
        }
    }
    rows.push(ClaimRow::new(
        "hamiltonian cycles, orders 3..n",
        n,
        if ham_ok {
            "all pass".into()
        } else {
            "failure".into()
        },
        "all pass",
        ham_ok,
    ));

    // 4-cycle-freeness at the generator-product level (checked up to 6).
    if n <= 6 {
        let ok = check_no_4cycle(n)?;
        rows.push(ClaimRow::new(
            "no 4-cycle (generator products)",
            n,
            if ok { "none".into() } else { "found".into() },
            "none",
            ok,
        ));
    }

    // Rings along the Hamiltonian cycles: dilation 1, congestion 1.
    let mut ring_dil = 0;
    let mut ring_cong = 0;
    for k in 3..=n {
        let report = measure(&crate::embedding::embed_ring(k, n)?, &pan_table)?;
        ring_dil = ring_dil.max(report.dilation);
        ring_cong = ring_cong.max(report.congestion.unwrap_or(0));
    }
    rows.push(ClaimRow::new(
        "ring(k!) dilation & congestion, k=3..n",
        n,
        format!("dilation {ring_dil}, congestion {ring_cong}"),
        "1 and 1",
        ring_dil == 1 && ring_cong == 1,
    ));

    // Lines of a few representative lengths.
    let mut line_ok = true;
    let full = factorial(n);
    for len in [1u64, 7.min(full), full] {
        let report = measure(&crate::embedding::embed_line(len, n)?, &pan_table)?;
        let expect = if len == 1 { 0 } else { 1 };
        if report.dilation != expect || (len > 1 && report.congestion != Some(1)) {
            line_ok = false;
        }
    }
    rows.push(ClaimRow::new(
        "line dilation & congestion (lengths 1, 7, n!)",
        n,
        if line_ok {
            "1 and 1".into()
        } else {
            "exceeded".into()
        },
        "1 and 1",
        line_ok,
    ));

    // n x (n-1)! grid, measured dilation bound 7.
    let report = measure(&embed_grid_nfact(n)?, &pan_table)?;
    rows.push(ClaimRow::new(
        "grid n x (n-1)! -> pancake dilation",
        n,
        report.dilation.to_string(),
        "<= 7",
        report.dilation <= 7,
    ));

    // Grid family for every p, measured dilation bound 4, plus the
    // constructive block-boundary step.
    let mut worst = 0;
    for p in 2..n {
        let report = measure(&embed_grid_family(p, n)?, &pan_table)?;
        worst = worst.max(report.dilation);
    }
    rows.push(ClaimRow::new(
        "grid family -> pancake dilation, p=2..n-1",
        n,
        worst.to_string(),
        "<= 4",
        worst <= 4,
    ));

    let mut step_max = 0;
    let mut step_ok = true;
    for k in 3..=n {
        let x = id.compose(&CyclicShift::new(k, k - 1)?.word(n)?)?;
        let route = route_grid_family_step(&x, k)?;
        step_ok &= validate_path(&route, &pancake).is_pass();
        step_max = step_max.max(route.len());
    }
    rows.push(ClaimRow::new(
        "grid family boundary route length",
        n,
        step_max.to_string(),
        "<= 4",
        step_ok && step_max <= 4,
    ));

    // Mixed-radix grid into pancake and star.
    let (dil, route_max, valid) =
        measure_with_routes(&crate::embedding::embed_mixed_grid_pancake(n)?, &pan_table)?;
    rows.push(ClaimRow::new(
        "mixed grid -> pancake dilation / route length",
        n,
        format!("dilation {dil}, routes <= {route_max}"),
        "<= 6",
        dil <= 6 && route_max <= 6 && valid,
    ));
    let (dil, route_max, valid) =
        measure_with_routes(&crate::embedding::embed_mixed_grid_star(n)?, &star_table)?;
    rows.push(ClaimRow::new(
        "mixed grid -> star dilation / route length",
        n,
        format!("dilation {dil}, routes <= {route_max}"),
        "<= 3",
        dil <= 3 && route_max <= 3 && valid,
    ));

    // Hypercube through the mixed grid (bound inherited: 6).
    let (dil, route_max, valid) = measure_with_routes(
        &crate::embedding::embed_hypercube_via_mixed_grid(n)?,
        &pan_table,
    )?;
    rows.push(ClaimRow::new(
        "hypercube Q_{n-1} -> pancake dilation",
        n,
        format!("dilation {dil}, routes <= {route_max}"),
        "<= 6",
        dil <= 6 && route_max <= 6 && valid,
    ));

    // Generalized hypercube into pancake and star.
    let (dil, route_max, valid) = measure_with_routes(&embed_ghc_pancake(n)?, &pan_table)?;
    rows.push(ClaimRow::new(
        "ghc -> pancake dilation / route length",
        n,
        format!("dilation {dil}, routes <= {route_max}"),
        "<= 8",
        dil <= 8 && route_max <= 8 && valid,
    ));
    let (dil, route_max, valid) = measure_with_routes(&embed_ghc_star(n)?, &star_table)?;
    rows.push(ClaimRow::new(
        "ghc -> star dilation / route length",
        n,
        format!("dilation {dil}, routes <= {route_max}"),
        "<= 4",
        dil <= 4 && route_max <= 4 && valid,
    ));

    // Hypercube through the generalized hypercube (bound inherited: 8).
    let (dil, route_max, valid) =
        measure_with_routes(&crate::embedding::embed_qd_via_ghc(n)?, &pan_table)?;
    rows.push(ClaimRow::new(
        "hypercube Q_d -> pancake dilation",
        n,
        format!("dilation {dil}, routes <= {route_max}"),
        "<= 8",
        dil <= 8 && route_max <= 8 && valid,
    ));

    // Both codings are bijections.
    let mut bij = true;
    let mut count = 0u64;
    for label in labels(n) {
        let a = left_count_decode(&label)?;
        let b = rule_r_decode(&label)?;
        bij &= left_count_encode(&a)? == label && rule_r_encode(&b)? == label;
        count += 1;
    }
    for r in 0..factorial(n) {
        let q = Permutation::from_lex_rank(n, r)?;
        bij &= left_count_decode(&left_count_encode(&q)?)? == q;
        bij &= rule_r_decode(&rule_r_encode(&q)?)? == q;
    }
    rows.push(ClaimRow::new(
        "left-count & rule-R codings bijective",
        n,
        format!(
            "{count} labels round-trip: {}",
            if bij { "yes" } else { "no" }
        ),
        "bijective",
        bij,
    ));

    // Cyclic-shift route lengths.
    let mut sig_ok = true;
    let mut sig_max = 0;
    for ell in 2..=n {
        for m in 1..ell {
            let route = route_sigma(&id, &CyclicShift::new(ell, m)?)?;
            sig_max = sig_max.max(route.len());
            sig_ok &= route.len() <= 3 && ((m != 1 && m != ell - 1) || route.len() <= 2);
            sig_ok &= validate_path(&route, &pancake).is_pass();
        }
    }
    rows.push(ClaimRow::new(
        "cyclic shift route length",
        n,
        sig_max.to_string(),
        "<= 3 (<= 2 when m is 1 or ell-1)",
        sig_ok,
    ));

    // Unit rule-R difference spans at most three word positions.
    if n <= 6 {
        let mut ok = true;
        for label in labels(n) {
            let x = rule_r_decode(&label)?;
            for i in 2..=n {
                for v in label.digit(i) + 1..i as u8 {
                    let y = rule_r_decode(&label.with_digit(i, v)?)?;
                    match diff3_decompose(&x, &y) {
                        Ok(d) => ok &= d.positions().len() <= 3 && d.apply_to(&x)? == y,
                        Err(_) => ok = false,
                    }
                }
            }
        }
        rows.push(ClaimRow::new(
            "unit rule-R difference spans <= 3 positions",
            n,
            if ok { "holds".into() } else { "fails".into() },
            "holds",
            ok,
        ));
    }

    // Distance oracle cross-check on seeded random pairs.
    if n <= 7 {
        let ok = oracle_cross_check(&pancake, &pan_table, n, seed, 1000)?;
        rows.push(ClaimRow::new(
            "left-invariant distance = direct BFS (1000 pairs)",
            n,
            if ok {
                "equal".into()
            } else {
                "mismatch".into()
            },
            "equal",
            ok,
        ));
    }

    Ok(())
}

fn measure_with_routes(
    e: &crate::embedding::Embedding,
    table: &DistanceTable,
) -> Result<(u32, usize, bool)> {
    let report = measure(e, table)?;
    let mut max_len = 0;
    let mut valid = e.fallback_log().is_empty();
    if let Some(routes) = e.routes() {
        for (_, path) in routes {
            max_len = max_len.max(path.len());
            valid &= validate_path(path, &e.host()).is_pass();
        }
    }
    Ok((report.dilation, max_len, valid))
}

fn oracle_cross_check(
    host: &GraphKind,
    table: &DistanceTable,
    n: usize,
    seed: u64,
    pairs: usize,
) -> Result<bool> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let count = factorial(n);
    for _ in 0..pairs {
        let u = Permutation::from_lex_rank(n, rng.gen_range(0..count))?;
        let v = Permutation::from_lex_rank(n, rng.gen_range(0..count))?;
        if cayley_distance(&u, &v, table)? != bfs_distance_between(host, &u, &v)? {
            return Ok(false);
        }
    }
    Ok(true)
}
