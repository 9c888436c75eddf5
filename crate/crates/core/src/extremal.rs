//! Constant-rank extremal sets A(n, r, d), covering radii, multi-covering
//! radii, and the sphere/repetition bounds on minimum covering-code size.
//!
//! Exhaustive routines work on packed points: the metric is translation
//! invariant, so a single table of norms gives d(x, y) = norms[x ^ y].
//! Covering computations over linear codes restrict the outer loop to coset
//! representatives, which is what makes the larger exact instances
//! tractable; translation by a codeword fixes the code and preserves every
//! distance, so each orbit of point sets is still visited.

use alloc::vec;
use alloc::vec::Vec;
use num_bigint::BigUint;

use crate::budget::EnumBudget;
use crate::clique::CliqueGraph;
use crate::code::LinearRdCode;
use crate::error::{Error, Result};
use crate::field::FieldContext;
use crate::gf2::{rank_of_words, RankVector};
use crate::rank_metric::{binomial_big, count_rank_exactly, rank_distance, sphere_volume};
use crate::rng::Xoshiro256;

fn ceil_log2(x: u64) -> u32 {
    if x <= 1 {
        0
    } else {
        64 - (x - 1).leading_zeros()
    }
}

/// A translation-invariant metric space on 2^bits packed points:
/// d(x, y) = norms[x ^ y].
pub(crate) struct XorSpace {
    pub(crate) bits: u32,
    pub(crate) norms: Vec<u8>,
}

impl XorSpace {
    pub(crate) fn len(&self) -> u64 {
        1u64 << self.bits
    }

    pub(crate) fn distance(&self, x: u64, y: u64) -> usize {
        self.norms[(x ^ y) as usize] as usize
    }
}

/// A rank space V^n with the rank of every packed point tabulated.
pub(crate) struct PackedSpace {
    ctx: FieldContext,
    n: usize,
    pub(crate) xor: XorSpace,
}

impl PackedSpace {
    pub(crate) fn build(ctx: FieldContext, n: usize, budget: EnumBudget) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyInput);
        }
        if n > ctx.degree() {
            return Err(Error::LengthExceedsDegree { len: n, degree: ctx.degree() });
        }
        let bits = (ctx.degree() * n) as u32;
        budget.check(bits)?;
        let degree = ctx.degree();
        let mask = (1u64 << degree) - 1;
        let total = 1u64 << bits;
        let mut norms = Vec::with_capacity(total as usize);
        let mut scratch = vec![0u64; n];
        for p in 0..total {
            for (j, slot) in scratch.iter_mut().enumerate() {
                *slot = p >> (j * degree) & mask;
            }
            norms.push(rank_of_words(&mut scratch) as u8);
        }
        Ok(PackedSpace { ctx, n, xor: XorSpace { bits, norms } })
    }

    fn len(&self) -> u64 {
        self.xor.len()
    }

    fn distance(&self, x: u64, y: u64) -> usize {
        self.xor.distance(x, y)
    }

    fn rank(&self, x: u64) -> usize {
        self.xor.norms[x as usize] as usize
    }

    fn vector(&self, packed: u64) -> RankVector {
        RankVector::from_packed(self.ctx, self.n, packed)
    }
}

/// cov(x, S): the farthest member of S from x.
pub fn cov(x: &RankVector, set: &[RankVector]) -> Result<usize> {
    if set.is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut worst = 0;
    for s in set {
        worst = worst.max(rank_distance(x, s)?);
    }
    Ok(worst)
}

/// cov(C, S): the best codeword's view of the worst member of S.
pub fn cov_code(code: &[RankVector], set: &[RankVector]) -> Result<usize> {
    if code.is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut best = usize::MAX;
    for c in code {
        best = best.min(cov(c, set)?);
    }
    Ok(best)
}

/// Result of a (multi-)covering radius computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoveringReport {
    pub code_size: u64,
    pub multiplicity: u64,
    /// Exact radius in exact mode, otherwise the largest value observed
    /// (a lower bound).
    pub radius: usize,
    pub exact: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoverMode {
    Exact,
    /// Random m-sets; the result is only a lower bound on the radius.
    Sampled {
        samples: u64,
        seed: u64,
    },
}

/// Reduced row echelon basis of GF(2) row vectors.
fn gf2_rref(mut rows: Vec<u64>) -> Vec<u64> {
    let rank = rank_of_words(&mut rows);
    rows.truncate(rank);
    for i in (0..rank).rev() {
        let lead = 63 - rows[i].leading_zeros();
        for j in 0..i {
            if rows[j] >> lead & 1 != 0 {
                rows[j] ^= rows[i];
            }
        }
    }
    rows
}

/// One representative per coset of the span: every value on the non-pivot
/// bits, zero on the pivots.
fn coset_reps(bits: u32, rref: &[u64]) -> Vec<u64> {
    let mut is_pivot = vec![false; bits as usize];
    for &row in rref {
        is_pivot[(63 - row.leading_zeros()) as usize] = true;
    }
    let free: Vec<u32> = (0..bits).filter(|&b| !is_pivot[b as usize]).collect();
    let mut reps = Vec::with_capacity(1 << free.len());
    for idx in 0..1u64 << free.len() {
        let mut v = 0u64;
        for (i, &pos) in free.iter().enumerate() {
            if idx >> i & 1 != 0 {
                v |= 1 << pos;
            }
        }
        reps.push(v);
    }
    reps
}

/// The code as a GF(2) space: packed generators x^j * row_i.
fn gf2_generators_packed(code: &LinearRdCode) -> Vec<u64> {
    let ctx = code.context();
    let degree = ctx.degree();
    let mut out = Vec::with_capacity(code.dim() * degree);
    for i in 0..code.dim() {
        for j in 0..degree {
            let mut packed = 0u64;
            for l in 0..code.len() {
                let scaled = ctx.mul_bits(code.generator().bits_at(i, l), 1 << j);
                packed |= (scaled as u64) << (l * degree);
            }
            out.push(packed);
        }
    }
    out
}

fn packed_codewords(code: &LinearRdCode, budget: EnumBudget) -> Result<Vec<u64>> {
    Ok(code.codewords(budget)?.map(|w| w.packed()).collect())
}

/// min over the code of the max distance to the points.
fn cov_packed(space: &XorSpace, code: &[u64], pts: &[u64]) -> usize {
    let mut best = usize::MAX;
    for &c in code {
        let mut worst = 0;
        for &p in pts {
            worst = worst.max(space.distance(c, p));
            if worst >= best {
                break;
            }
        }
        best = best.min(worst);
        if best == 0 {
            break;
        }
    }
    best
}

/// Exact m-covering radius. A GF(2) basis of the code restricts the outer
/// loop to coset representatives; `None` scans every point.
pub(crate) fn exact_multi_cov(
    space: &XorSpace,
    code: &[u64],
    gf2_basis: Option<Vec<u64>>,
    m: u64,
    budget: EnumBudget,
) -> Result<usize> {
    if code.is_empty() {
        return Err(Error::EmptyInput);
    }
    if m == 0 || m > space.len() {
        return Err(Error::InvalidParameter("multiplicity must satisfy 1 <= m <= |space|"));
    }
    let reps = match gf2_basis {
        Some(basis) => coset_reps(space.bits, &gf2_rref(basis)),
        None => (0..space.len()).collect(),
    };
    let work =
        ceil_log2(reps.len() as u64) + (m as u32 - 1) * space.bits + ceil_log2(code.len() as u64);
    budget.check(work)?;
    match m {
        1 => {
            let mut worst = 0;
            for &rep in &reps {
                let mut best = usize::MAX;
                for &c in code {
                    best = best.min(space.distance(rep, c));
                    if best == 0 {
                        break;
                    }
                }
                worst = worst.max(best);
            }
            Ok(worst)
        }
        2 => {
            let mut worst = 0;
            let total = space.len();
            for &rep in &reps {
                let dr: Vec<u8> = code.iter().map(|&c| space.distance(rep, c) as u8).collect();
                for v in 0..total {
                    if v == rep {
                        continue;
                    }
                    let mut g = usize::MAX;
                    for (idx, &c) in code.iter().enumerate() {
                        let d = (dr[idx] as usize).max(space.distance(v, c));
                        if d < g {
                            g = d;
                            if g <= worst {
                                break;
                            }
                        }
                    }
                    if g > worst {
                        worst = g;
                    }
                }
            }
            Ok(worst)
        }
        _ => {
            let mut worst = 0;
            let mut pts = vec![0u64; m as usize];
            for &rep in &reps {
                pts[0] = rep;
                multi_cov_rec(space, code, &mut pts, 1, 0, &mut worst);
            }
            Ok(worst)
        }
    }
}

fn multi_cov_rec(
    space: &XorSpace,
    code: &[u64],
    pts: &mut Vec<u64>,
    depth: usize,
    start: u64,
    worst: &mut usize,
) {
    if depth == pts.len() {
        let g = cov_packed(space, code, pts);
        if g > *worst {
            *worst = g;
        }
        return;
    }
    for v in start..space.len() {
        if v == pts[0] {
            continue;
        }
        pts[depth] = v;
        multi_cov_rec(space, code, pts, depth + 1, v + 1, worst);
    }
}

pub(crate) fn sampled_multi_cov(
    space: &XorSpace,
    code: &[u64],
    m: u64,
    samples: u64,
    seed: u64,
    budget: EnumBudget,
) -> Result<usize> {
    if code.is_empty() {
        return Err(Error::EmptyInput);
    }
    if m == 0 || m > space.len() {
        return Err(Error::InvalidParameter("multiplicity must satisfy 1 <= m <= |space|"));
    }
    budget.check(ceil_log2(samples) + ceil_log2(m) + ceil_log2(code.len() as u64))?;
    let mut rng = Xoshiro256::seeded(seed);
    let mut pts: Vec<u64> = Vec::with_capacity(m as usize);
    let mut worst = 0;
    for _ in 0..samples {
        pts.clear();
        while pts.len() < m as usize {
            let v = rng.below(space.len());
            if !pts.contains(&v) {
                pts.push(v);
            }
        }
        worst = worst.max(cov_packed(space, code, &pts));
    }
    Ok(worst)
}

/// Covering radius t(C) of a linear code: the farthest any vector of the
/// space sits from the code. Computed over coset representatives.
pub fn covering_radius(code: &LinearRdCode, budget: EnumBudget) -> Result<usize> {
    Ok(multi_covering_radius(code, 1, CoverMode::Exact, budget)?.radius)
}

/// m-covering radius of a linear code: the worst m-set of space vectors,
/// measured by the best single codeword covering the whole set.
pub fn multi_covering_radius(
    code: &LinearRdCode,
    m: u64,
    mode: CoverMode,
    budget: EnumBudget,
) -> Result<CoveringReport> {
    let space = PackedSpace::build(code.context(), code.len(), budget)?;
    let words = packed_codewords(code, budget)?;
    let radius = match mode {
        CoverMode::Exact => {
            exact_multi_cov(&space.xor, &words, Some(gf2_generators_packed(code)), m, budget)?
        }
        CoverMode::Sampled { samples, seed } => {
            sampled_multi_cov(&space.xor, &words, m, samples, seed, budget)?
        }
    };
    Ok(CoveringReport {
        code_size: words.len() as u64,
        multiplicity: m,
        radius,
        exact: matches!(mode, CoverMode::Exact),
    })
}

/// m-covering radius of an arbitrary nonempty set of vectors.
pub fn multi_covering_radius_of_set(
    words: &[RankVector],
    m: u64,
    mode: CoverMode,
    budget: EnumBudget,
) -> Result<CoveringReport> {
    if words.is_empty() {
        return Err(Error::EmptyInput);
    }
    let ctx = words[0].context();
    let n = words[0].len();
    for w in words {
        if w.context() != ctx {
            return Err(Error::ContextMismatch);
        }
        if w.len() != n {
            return Err(Error::ShapeMismatch { expected: n, got: w.len() });
        }
    }
    let space = PackedSpace::build(ctx, n, budget)?;
    let packed: Vec<u64> = words.iter().map(|w| w.packed()).collect();
    let radius = match mode {
        CoverMode::Exact => exact_multi_cov(&space.xor, &packed, None, m, budget)?,
        CoverMode::Sampled { samples, seed } => {
            sampled_multi_cov(&space.xor, &packed, m, samples, seed, budget)?
        }
    };
    Ok(CoveringReport {
        code_size: packed.len() as u64,
        multiplicity: m,
        radius,
        exact: matches!(mode, CoverMode::Exact),
    })
}

/// Covering radius of an arbitrary nonempty set of vectors.
pub fn covering_radius_of_set(words: &[RankVector], budget: EnumBudget) -> Result<usize> {
    Ok(multi_covering_radius_of_set(words, 1, CoverMode::Exact, budget)?.radius)
}

/// m-covering radius of a code relative to an explicit point set: the worst
/// m-subset of `points`, each set measured by its best covering codeword.
///
/// With `points` = the whole space this is the plain m-covering radius; a
/// restricted point set captures receivers with structure, such as the
/// repeated-block vectors a fold-repetition code is used against.
pub fn multi_covering_radius_over_points(
    code: &[RankVector],
    points: &[RankVector],
    m: u64,
    budget: EnumBudget,
) -> Result<usize> {
    if code.is_empty() || points.is_empty() {
        return Err(Error::EmptyInput);
    }
    if m == 0 || m > points.len() as u64 {
        return Err(Error::InvalidParameter("multiplicity must satisfy 1 <= m <= |points|"));
    }
    budget.check((m as u32) * ceil_log2(points.len() as u64) + ceil_log2(code.len() as u64))?;
    fn rec(
        code: &[RankVector],
        points: &[RankVector],
        chosen: &mut Vec<RankVector>,
        depth: usize,
        start: usize,
        worst: &mut usize,
    ) -> Result<()> {
        if depth == 0 {
            *worst = (*worst).max(cov_code(code, chosen)?);
            return Ok(());
        }
        for i in start..points.len() {
            chosen.push(points[i].clone());
            rec(code, points, chosen, depth - 1, i + 1, worst)?;
            chosen.pop();
        }
        Ok(())
    }
    let mut worst = 0;
    let mut chosen = Vec::with_capacity(m as usize);
    rec(code, points, &mut chosen, m as usize, 0, &mut worst)?;
    Ok(worst)
}

/// m-covering radius of the whole space V^n (the smallest radius any code
/// of that length can reach).
pub fn space_multi_covering_radius(
    ctx: FieldContext,
    n: usize,
    m: u64,
    budget: EnumBudget,
) -> Result<usize> {
    let space = PackedSpace::build(ctx, n, budget)?;
    let all: Vec<u64> = (0..space.len()).collect();
    let unit_basis: Vec<u64> = (0..space.xor.bits as u64).map(|b| 1u64 << b).collect();
    exact_multi_cov(&space.xor, &all, Some(unit_basis), m, budget)
}

/// A set of vectors of one fixed rank with pairwise distance at least d.
#[derive(Debug, Clone)]
pub struct ConstantRankSet {
    pub n: usize,
    pub r: usize,
    pub d: usize,
    pub members: Vec<RankVector>,
}

impl ConstantRankSet {
    pub fn size(&self) -> usize {
        self.members.len()
    }

    /// Checks every member has rank exactly r and every pair is >= d apart.
    pub fn verify(&self) -> Result<bool> {
        for m in &self.members {
            if crate::rank_metric::rank_norm(m) != self.r {
                return Ok(false);
            }
        }
        for i in 0..self.members.len() {
            for j in i + 1..self.members.len() {
                if rank_distance(&self.members[i], &self.members[j])? < self.d {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    Exact,
    Greedy,
}

/// Sound block key: vectors sharing it are never d or more apart, so each
/// block is an independent set of the search graph. Two vectors agreeing on
/// their coordinate equality pattern and on the first n-d+1 coordinates
/// differ in at most d-1 independent columns.
fn block_key(space: &PackedSpace, packed: u64, d: usize) -> Vec<u16> {
    let degree = space.ctx.degree();
    let mask = (1u64 << degree) - 1;
    let n = space.n;
    let mut key = Vec::with_capacity(2 * n);
    let mut seen: Vec<u64> = Vec::new();
    for j in 0..n {
        let c = packed >> (j * degree) & mask;
        if c == 0 {
            key.push(0);
        } else {
            let idx = match seen.iter().position(|&s| s == c) {
                Some(i) => i,
                None => {
                    seen.push(c);
                    seen.len() - 1
                }
            };
            key.push(idx as u16 + 1);
        }
    }
    let prefix = n.saturating_sub(d) + 1;
    for j in 0..prefix.min(n) {
        key.push((packed >> (j * degree) & mask) as u16);
    }
    key
}

/// Searches for a maximum (exact) or maximal (greedy) set of rank-r vectors
/// in V^n with pairwise rank distance at least d.
///
/// The exact search runs branch-and-bound maximum clique on the
/// compatibility graph, rooted at one fixed vertex: rank-preserving changes
/// of basis on either side act transitively on rank-r vectors, so some
/// maximum set contains the first vertex and the root never needs to be
/// revisited. Vertices are ordered by block so the coloring bound collapses
/// to the block count.
pub fn a_search(
    ctx: FieldContext,
    n: usize,
    r: usize,
    d: usize,
    mode: SearchMode,
    budget: EnumBudget,
) -> Result<ConstantRankSet> {
    if d == 0 {
        return Err(Error::InvalidParameter("distance must be at least 1"));
    }
    let space = PackedSpace::build(ctx, n, budget)?;
    let mut vertices: Vec<u64> = (0..space.len()).filter(|&p| space.rank(p) == r).collect();
    if vertices.is_empty() {
        // r > min(n, N): no vectors of that rank exist
        return Ok(ConstantRankSet { n, r, d, members: Vec::new() });
    }
    if d == 1 {
        // distinct vectors are always at distance >= 1
        let members = vertices.iter().map(|&p| space.vector(p)).collect();
        return Ok(ConstantRankSet { n, r, d, members });
    }
    let mut keyed: Vec<(Vec<u16>, u64)> =
        vertices.drain(..).map(|p| (block_key(&space, p, d), p)).collect();
    keyed.sort();
    let ordered: Vec<u64> = keyed.into_iter().map(|(_, p)| p).collect();

    let members: Vec<u64> = match mode {
        SearchMode::Greedy => {
            let mut chosen: Vec<u64> = Vec::new();
            for &v in &ordered {
                if chosen.iter().all(|&c| space.distance(c, v) >= d) {
                    chosen.push(v);
                }
            }
            chosen
        }
        SearchMode::Exact => {
            let root = ordered[0];
            let neigh: Vec<u64> =
                ordered.iter().copied().filter(|&v| space.distance(root, v) >= d).collect();
            budget.check(2 * ceil_log2(neigh.len().max(1) as u64))?;
            let mut graph = CliqueGraph::new(neigh.len());
            for a in 0..neigh.len() {
                for b in a + 1..neigh.len() {
                    if space.distance(neigh[a], neigh[b]) >= d {
                        graph.add_edge(a, b);
                    }
                }
            }
            let mut chosen = vec![root];
            chosen.extend(graph.max_clique().into_iter().map(|i| neigh[i]));
            chosen
        }
    };
    let set = ConstantRankSet {
        n,
        r,
        d,
        members: members.into_iter().map(|p| space.vector(p)).collect(),
    };
    debug_assert!(set.verify()?);
    Ok(set)
}

/// Upper bound on A(n, n, d): the product (2^N - 1)(2^N - 2)..(2^N - 2^(n-d)).
pub fn a_upper_bound(n: u64, d: u64, ext_degree: u64) -> Result<BigUint> {
    if d == 0 || d > n {
        return Err(Error::InvalidParameter("need 1 <= d <= n"));
    }
    if n > ext_degree {
        return Err(Error::InvalidParameter("need n <= N"));
    }
    let order = BigUint::from(2u32).pow(ext_degree as u32);
    let mut out = BigUint::from(1u32);
    for i in 0..=(n - d) {
        out *= &order - BigUint::from(2u32).pow(i as u32);
    }
    Ok(out)
}

/// Lower bound on the size of any code achieving m-covering radius <= t, or
/// the infinite sentinel when no finite code can.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SphereBound {
    Finite(BigUint),
    Infinite,
}

/// Generalized sphere bound: K * C(V(n,t), m) >= C(2^(Nn), m), so
/// K >= ceil(C(2^(Nn), m) / C(V(n,t), m)).
///
/// Infinite when m >= 2 and t < ceil(n/2) (below the pair floor no finite
/// code reaches radius t), when fewer than m points fit in one ball, or
/// when the quotient exceeds the space size.
pub fn sphere_bound_min_k(n: u64, t: u64, m: u64, ext_degree: u64) -> Result<SphereBound> {
    if m == 0 {
        return Err(Error::InvalidParameter("multiplicity must be at least 1"));
    }
    if m >= 2 && t < n.div_ceil(2) {
        return Ok(SphereBound::Infinite);
    }
    let vol = sphere_volume(n, t, ext_degree, 2);
    if vol < BigUint::from(m) {
        return Ok(SphereBound::Infinite);
    }
    let total = BigUint::from(2u32).pow((ext_degree * n) as u32);
    let numer = binomial_big(&total, m);
    let denom = binomial_big(&vol, m);
    if numer > &total * &denom {
        return Ok(SphereBound::Infinite);
    }
    let bound = (&numer + &denom - BigUint::from(1u32)) / &denom;
    Ok(SphereBound::Finite(bound))
}

/// Upper bound m L_n(n) + 1 on the minimum size of a code with m-covering
/// radius n - 1: the zero word plus enough full-rank words. Only meaningful
/// while the bound does not exceed the space size.
pub fn rep_upper_bound_k(n: u64, m: u64, ext_degree: u64) -> Result<BigUint> {
    if m == 0 {
        return Err(Error::InvalidParameter("multiplicity must be at least 1"));
    }
    if n > ext_degree {
        return Err(Error::InvalidParameter("need n <= N"));
    }
    let bound = BigUint::from(m) * count_rank_exactly(n, n, ext_degree, 2) + BigUint::from(1u32);
    let total = BigUint::from(2u32).pow((ext_degree * n) as u32);
    if bound > total {
        return Err(Error::InvalidParameter("bound exceeds the space size"));
    }
    Ok(bound)
}

/// Exhaustive minimum cardinality of a subset of V^n with exact m-covering
/// radius at most t. Only for toy spaces of at most 16 points. `None` when
/// no subset achieves the radius.
pub fn exact_min_k(
    ctx: FieldContext,
    n: usize,
    t: usize,
    m: u64,
    budget: EnumBudget,
) -> Result<Option<u64>> {
    let space = PackedSpace::build(ctx, n, budget)?;
    let size = space.len();
    if size > 16 {
        return Err(Error::InvalidParameter(
            "exhaustive minimum needs a space of at most 16 points",
        ));
    }
    if m == 0 || m > size {
        return Err(Error::InvalidParameter("multiplicity must satisfy 1 <= m <= |space|"));
    }
    let size = size as usize;
    budget.check(size as u32 + (m as u32) * ceil_log2(size as u64) + ceil_log2(size as u64))?;
    let mut best: Option<u64> = None;
    for mask in 1u32..1 << size {
        let members = mask.count_ones() as u64;
        if best.is_some_and(|b| members >= b) {
            continue;
        }
        let code: Vec<u64> = (0..size as u64).filter(|&i| mask >> i & 1 != 0).collect();
        if subset_covers(&space.xor, &code, m as usize, t) {
            best = Some(members);
        }
    }
    Ok(best)
}

/// True iff every m-subset of the space is covered within t by some single
/// member of the code.
fn subset_covers(space: &XorSpace, code: &[u64], m: usize, t: usize) -> bool {
    fn rec(
        space: &XorSpace,
        code: &[u64],
        pts: &mut Vec<u64>,
        depth: usize,
        start: u64,
        t: usize,
    ) -> bool {
        if depth == pts.len() {
            return cov_packed(space, code, pts) <= t;
        }
        for v in start..space.len() {
            pts[depth] = v;
            if !rec(space, code, pts, depth + 1, v + 1, t) {
                return false;
            }
        }
        true
    }
    let mut pts = vec![0u64; m];
    rec(space, code, &mut pts, 0, 0, t)
}
