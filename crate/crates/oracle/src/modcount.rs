//! Exact quadrant-walk counting for large lengths.
//!
//! The layered DP is run modulo a batch of 30-bit primes whose product
//! exceeds (total step weight)^k, so Chinese remaindering recovers every
//! per-length total exactly. Primes are processed in interleaved groups of
//! sixteen residues per cell (one 512-bit lane), and each pass over the grid
//! advances a tile of TAU time steps with a row wavefront, so DRAM traffic
//! per step is divided by the tile depth. Filtered totals (all endpoints,
//! origin, either axis) are folded into the sweep as rows are produced — the
//! full table is never rescanned.
//!
//! Scope: start point in N², steps within {-1,0,1}², integer weights. The
//! general-purpose rational-weight DP lives in `walks.rs`; this engine is the
//! big-k fast path and is cross-checked against it in tests.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};

/// Primes per interleaved group; one cell's residues fill one 512-bit lane.
const GROUP: usize = 16;
/// Time-tile depth: DRAM traffic scales as 1/TAU.
const TAU: usize = 16;

pub(crate) struct ModCounts {
    primes: Vec<u32>,
    /// Residues indexed [length][prime]; one vector per endpoint filter.
    anywhere: Vec<Vec<u32>>,
    origin: Vec<Vec<u32>>,
    x_axis: Vec<Vec<u32>>,
    y_axis: Vec<Vec<u32>>,
    /// Partial products of the primes, for incremental reconstruction.
    prefix_products: Vec<BigInt>,
    /// inv(prefix_products[i] mod primes[i]) mod primes[i].
    garner_inverses: Vec<u32>,
}

#[derive(Clone, Copy, Debug)]
pub(crate) enum FilterKind {
    Anywhere,
    Origin,
    XAxis,
    YAxis,
}

impl ModCounts {
    /// Reconstructs the exact count for one filter and length.
    pub(crate) fn reconstruct(&self, filter: FilterKind, len: usize) -> BigInt {
        let residues = match filter {
            FilterKind::Anywhere => &self.anywhere[len],
            FilterKind::Origin => &self.origin[len],
            FilterKind::XAxis => &self.x_axis[len],
            FilterKind::YAxis => &self.y_axis[len],
        };
        let mut x = BigInt::from(residues[0]);
        for i in 1..self.primes.len() {
            let p = self.primes[i] as u64;
            let x_mod = (&x % self.primes[i]).to_u64().unwrap();
            let r = residues[i] as u64;
            let t = (r + p - x_mod) % p;
            let t = (t * self.garner_inverses[i] as u64) % p;
            x += &self.prefix_products[i] * BigInt::from(t);
        }
        x
    }
}

/// Runs the modular DP for all lengths 0..=k and every filter at once.
///
/// `steps` are (dx, dy, weight) with |dx|,|dy| <= 1; weights are nonnegative
/// integers (reduced modulo each prime internally).
pub(crate) fn quadrant_mod_counts(
    steps: &[(i8, i8, BigInt)],
    start: (usize, usize),
    k: usize,
) -> ModCounts {
    assert!(!steps.is_empty());
    let weight_sum: BigInt = steps.iter().map(|(_, _, w)| w.clone()).sum();
    // The fused u32 kernel tolerates at most four unreduced additions.
    let unit_kernel = steps.iter().all(|(_, _, w)| w.is_one()) && steps.len() <= 4;
    // Coordinate-sum drift bound: x + y <= x0 + y0 + slope * t prunes row
    // widths whenever no step gains more than one unit of x + y.
    let slope = steps.iter().map(|&(dx, dy, _)| dx as i64 + dy as i64).max().unwrap();
    let primes = primes_for(&weight_sum, k);

    let (x0, y0) = start;
    let width = x0 + k + 1;
    let height = y0 + k + 1;
    let stride = width * GROUP;

    let mut grid_a = vec![0u32; stride * height];
    let mut grid_b = vec![0u32; stride * height];
    // Ring buffers for intermediate wavefront levels 1..TAU-1: three rows
    // each, cycled by absolute row index.
    let mut rings = vec![vec![0u32; 3 * stride]; TAU.saturating_sub(1)];
    let zero_row = vec![0u32; stride];

    let n_groups = primes.len().div_ceil(GROUP);
    let mut totals_any = vec![vec![0u32; primes.len()]; k + 1];
    let mut totals_org = vec![vec![0u32; primes.len()]; k + 1];
    let mut totals_xax = vec![vec![0u32; primes.len()]; k + 1];
    let mut totals_yax = vec![vec![0u32; primes.len()]; k + 1];

    for group in 0..n_groups {
        // Ragged last group: pad with the first prime; those lanes are ignored.
        let mut group_primes = [0u32; GROUP];
        for g in 0..GROUP {
            group_primes[g] = *primes.get(group * GROUP + g).unwrap_or(&primes[0]);
        }
        let group_weights: Vec<[u64; GROUP]> = steps
            .iter()
            .map(|(_, _, w)| {
                let mut lane = [0u64; GROUP];
                for g in 0..GROUP {
                    lane[g] = (w % group_primes[g]).to_u64().unwrap();
                }
                lane
            })
            .collect();

        grid_a.iter_mut().for_each(|c| *c = 0);
        grid_b.iter_mut().for_each(|c| *c = 0);
        for ring in &mut rings {
            ring.iter_mut().for_each(|c| *c = 0);
        }

        // Length-0 state: unit mass at the start point.
        for g in 0..GROUP {
            grid_a[y0 * stride + x0 * GROUP + g] = 1;
        }
        let mut acc = GroupTotals::new(k, group, primes.len());
        acc.seed_start(start);

        let mut t0 = 0usize;
        while t0 < k {
            let tau = TAU.min(k - t0);
            sweep_tile(SweepArgs {
                grid_in: &grid_a,
                grid_out: &mut grid_b,
                rings: &mut rings,
                zero_row: &zero_row,
                steps,
                group_primes: &group_primes,
                group_weights: &group_weights,
                unit_kernel,
                start,
                width,
                stride,
                slope,
                t0,
                tau,
                acc: &mut acc,
            });
            std::mem::swap(&mut grid_a, &mut grid_b);
            t0 += tau;
        }

        acc.commit(
            &group_primes,
            &mut totals_any,
            &mut totals_org,
            &mut totals_xax,
            &mut totals_yax,
        );
    }

    // Precompute Garner data for reconstruction.
    let mut prefix_products = Vec::with_capacity(primes.len());
    let mut garner_inverses = Vec::with_capacity(primes.len());
    let mut m = BigInt::one();
    for (i, &p) in primes.iter().enumerate() {
        prefix_products.push(m.clone());
        if i == 0 {
            garner_inverses.push(0);
        } else {
            let m_mod = (&m % p).to_u64().unwrap();
            garner_inverses.push(mod_inverse(m_mod, p as u64) as u32);
        }
        m *= p;
    }

    ModCounts {
        primes,
        anywhere: totals_any,
        origin: totals_org,
        x_axis: totals_xax,
        y_axis: totals_yax,
        prefix_products,
        garner_inverses,
    }
}

/// Per-group running totals in u64 lanes (no overflow: each row sum is below
/// width * 2^30 <= 2^45, and at most 2^18 rows accumulate per length).
struct GroupTotals {
    group: usize,
    n_primes: usize,
    anywhere: Vec<[u64; GROUP]>,
    origin: Vec<[u64; GROUP]>,
    x_axis: Vec<[u64; GROUP]>,
    y_axis: Vec<[u64; GROUP]>,
}

impl GroupTotals {
    fn new(k: usize, group: usize, n_primes: usize) -> Self {
        GroupTotals {
            group,
            n_primes,
            anywhere: vec![[0; GROUP]; k + 1],
            origin: vec![[0; GROUP]; k + 1],
            x_axis: vec![[0; GROUP]; k + 1],
            y_axis: vec![[0; GROUP]; k + 1],
        }
    }

    fn seed_start(&mut self, start: (usize, usize)) {
        for g in 0..GROUP {
            self.anywhere[0][g] = 1;
            if start == (0, 0) {
                self.origin[0][g] = 1;
            }
            if start.1 == 0 {
                self.x_axis[0][g] = 1;
            }
            if start.0 == 0 {
                self.y_axis[0][g] = 1;
            }
        }
    }

    /// Folds a freshly produced row (state at `len`, row index `row`) into
    /// the per-length totals; `totals` are the row's lane sums as returned
    /// by the production kernel, `data` is the row (for its first cell).
    fn fold_row(&mut self, len: usize, row: usize, data: &[u32], totals: &[u64; GROUP]) {
        for g in 0..GROUP {
            self.anywhere[len][g] += totals[g];
            self.y_axis[len][g] += data[g] as u64;
        }
        if row == 0 {
            for g in 0..GROUP {
                self.x_axis[len][g] += totals[g];
                self.origin[len][g] += data[g] as u64;
            }
        }
    }

    fn commit(
        &self,
        group_primes: &[u32; GROUP],
        any: &mut [Vec<u32>],
        org: &mut [Vec<u32>],
        xax: &mut [Vec<u32>],
        yax: &mut [Vec<u32>],
    ) {
        for len in 0..self.anywhere.len() {
            for g in 0..GROUP {
                let idx = self.group * GROUP + g;
                if idx >= self.n_primes {
                    continue;
                }
                let p = group_primes[g] as u64;
                any[len][idx] = (self.anywhere[len][g] % p) as u32;
                org[len][idx] = (self.origin[len][g] % p) as u32;
                xax[len][idx] = (self.x_axis[len][g] % p) as u32;
                yax[len][idx] = (self.y_axis[len][g] % p) as u32;
            }
        }
    }
}

struct SweepArgs<'a> {
    grid_in: &'a [u32],
    grid_out: &'a mut [u32],
    rings: &'a mut [Vec<u32>],
    zero_row: &'a [u32],
    steps: &'a [(i8, i8, BigInt)],
    group_primes: &'a [u32; GROUP],
    group_weights: &'a [[u64; GROUP]],
    unit_kernel: bool,
    start: (usize, usize),
    width: usize,
    stride: usize,
    slope: i64,
    t0: usize,
    tau: usize,
    acc: &'a mut GroupTotals,
}

/// Advances the state from time t0 to t0+tau in one wavefront sweep over the
/// rows. Level l (state at time t0+l) row r is produced as soon as level
/// l-1 rows r-1, r, r+1 exist; level tau rows stream straight into grid_out.
fn sweep_tile(args: SweepArgs<'_>) {
    let SweepArgs {
        grid_in,
        grid_out,
        rings,
        zero_row,
        steps,
        group_primes,
        group_weights,
        unit_kernel,
        start,
        width,
        stride,
        slope,
        t0,
        tau,
        acc,
    } = args;
    let (x0, y0) = start;
    let y_top = y0 + t0; // rows above this are zero at time t0

    // Populated prefix of a level-l row r: cells reachable in t0+l steps,
    // bounded by the x-range, the grid width, and (when slope <= 1) the
    // coordinate-sum drift. Prefixes of adjacent levels differ by at most
    // two cells, which the three-cell zero pad covers.
    let cells_at = |l: usize, r: usize| -> usize {
        let mut c = width.min(x0 + t0 + l + 1);
        if slope <= 1 {
            let cap = x0 as i64 + y0 as i64 + slope * (t0 + l) as i64 - r as i64 + 1;
            c = c.min(cap.max(1) as usize);
        }
        c
    };

    let mut main_y = y_top as i64;
    while main_y >= -(tau as i64) {
        for l in 1..=tau {
            let r = main_y + l as i64;
            if r < 0 {
                continue;
            }
            let r = r as usize;
            // Sources: level l-1 rows r+1, r, r-1 (for dy = -1, 0, +1).
            let src_extent = y0 as i64 + t0 as i64 + l as i64 - 1;
            let (rings_lo, rings_hi) = rings.split_at_mut(l.saturating_sub(1));
            let fetch = |s: i64| -> *const u32 {
                if s < 0 || s > src_extent {
                    return zero_row.as_ptr();
                }
                let s = s as usize;
                if l == 1 {
                    grid_in[s * stride..].as_ptr()
                } else {
                    rings_lo[l - 2][(s % 3) * stride..].as_ptr()
                }
            };
            let sources: Vec<(*const u32, i64)> = steps
                .iter()
                .map(|&(dx, dy, _)| (fetch(r as i64 - dy as i64), dx as i64))
                .collect();
            let dst: &mut [u32] = if l == tau {
                &mut grid_out[r * stride..(r + 1) * stride]
            } else {
                let ring = &mut rings_hi[0];
                &mut ring[(r % 3) * stride..(r % 3 + 1) * stride]
            };

            let cells = cells_at(l, r);
            // SAFETY: the source pointers reference rows of grid_in, the
            // level l-1 ring, or the zero row — all distinct from dst (dst
            // is grid_out or the level-l ring) and alive for the call; reads
            // stay within one row stride of each base pointer.
            let totals = unsafe {
                if unit_kernel {
                    produce_row_unit(dst, &sources, cells, stride, group_primes)
                } else {
                    produce_row_weighted(dst, &sources, group_weights, cells, stride, group_primes)
                }
            };
            acc.fold_row(t0 + l, r, dst, &totals);
        }
        main_y -= 1;
    }
}

#[inline(always)]
fn reduce_lanes(acc: &mut [u32; GROUP], group_primes: &[u32; GROUP]) {
    // Values below 4p land in [0, p) after two conditional subtractions;
    // wrapping keeps the branchless min trick valid.
    for g in 0..GROUP {
        let p = group_primes[g];
        let mut x = acc[g];
        let t = x.wrapping_sub(2 * p);
        x = x.min(t);
        let t = x.wrapping_sub(p);
        x = x.min(t);
        acc[g] = x;
    }
}

/// Computes one output row in a single pass: for each cell x,
/// dst[x] = reduce(sum over sources of src[x - dx]), and returns the row's
/// lane totals (folded on the fly while the values are in registers). Unit
/// weights only, at most four sources (so the unreduced lane sum stays
/// below 2^32).
///
/// Sources are raw row pointers of length `stride`; every read beyond a
/// source's populated prefix hits its three-cell zero pad. The first and last
/// cells drop sources whose shifted read would leave the row entirely.
unsafe fn produce_row_unit(
    dst: &mut [u32],
    sources: &[(*const u32, i64)],
    cells: usize,
    stride: usize,
    group_primes: &[u32; GROUP],
) -> [u64; GROUP] {
    // Monomorphize on the source count so the lane accumulators stay in
    // registers and the source loop unrolls completely.
    unsafe {
        match sources.len() {
            1 => unit_row::<1>(dst, sources, cells, stride, group_primes),
            2 => unit_row::<2>(dst, sources, cells, stride, group_primes),
            3 => unit_row::<3>(dst, sources, cells, stride, group_primes),
            4 => unit_row::<4>(dst, sources, cells, stride, group_primes),
            n => unreachable!("unit kernel limited to 4 sources, got {n}"),
        }
    }
}

unsafe fn unit_row<const NS: usize>(
    dst: &mut [u32],
    sources: &[(*const u32, i64)],
    cells: usize,
    stride: usize,
    group_primes: &[u32; GROUP],
) -> [u64; GROUP] {
    let n = cells * GROUP;
    // Bake the dx shift into each base pointer: cell x reads base + x*GROUP.
    // For dx = 1 the base sits one cell before the row; it is only ever
    // dereferenced at x >= 1, where the address is back inside the row.
    let mut bases = [std::ptr::null::<u32>(); NS];
    let mut dxs = [0i64; NS];
    for s in 0..NS {
        let (src, dx) = sources[s];
        bases[s] = src.wrapping_offset((-dx) as isize * GROUP as isize);
        dxs[s] = dx;
    }

    // Cell 0: only sources with dx <= 0 (dx = 1 would read cell -1).
    let mut first = [0u32; GROUP];
    for s in 0..NS {
        if dxs[s] <= 0 {
            for (g, f) in first.iter_mut().enumerate() {
                *f += unsafe { *bases[s].add(g) };
            }
        }
    }
    reduce_lanes(&mut first, group_primes);
    dst[..GROUP].copy_from_slice(&first);

    // Row totals: u32 partial sums (reduced cells are below 2^30, so four
    // fit without overflow) flushed into u64 lanes.
    let mut total = [0u64; GROUP];
    let mut part = first;
    let mut pending = 1usize;

    // Main run: all shifted reads x - dx lie in [0, cells], covered by the
    // pad — except when the prefix already fills the row (final length),
    // where the dx = -1 read of cell `cells` must be dropped.
    let full_end = if n + GROUP <= stride { cells } else { cells - 1 };
    let out = dst.as_mut_ptr();
    for x in 1..full_end {
        let off = x * GROUP;
        let mut accv = [0u32; GROUP];
        for s in 0..NS {
            let p = unsafe { bases[s].add(off) };
            for (g, a) in accv.iter_mut().enumerate() {
                *a = a.wrapping_add(unsafe { *p.add(g) });
            }
        }
        reduce_lanes(&mut accv, group_primes);
        for (g, &a) in accv.iter().enumerate() {
            unsafe { *out.add(off + g) = a };
        }
        for (g, &a) in accv.iter().enumerate() {
            part[g] += a;
        }
        pending += 1;
        if pending == 4 {
            for g in 0..GROUP {
                total[g] += part[g] as u64;
                part[g] = 0;
            }
            pending = 0;
        }
    }
    if full_end < cells && cells > 1 {
        let x = cells - 1;
        let mut accv = [0u32; GROUP];
        for s in 0..NS {
            if dxs[s] >= 0 {
                let p = unsafe { bases[s].add(x * GROUP) };
                for (g, a) in accv.iter_mut().enumerate() {
                    *a = a.wrapping_add(unsafe { *p.add(g) });
                }
            }
        }
        reduce_lanes(&mut accv, group_primes);
        dst[x * GROUP..(x + 1) * GROUP].copy_from_slice(&accv);
        for (g, &a) in accv.iter().enumerate() {
            part[g] += a;
        }
        pending += 1;
    }
    if pending > 0 {
        for g in 0..GROUP {
            total[g] += part[g] as u64;
        }
    }
    let pad_end = (n + 3 * GROUP).min(stride);
    dst[n..pad_end].iter_mut().for_each(|c| *c = 0);
    total
}

/// General-weight variant: u64 lane accumulators with one modulo per lane
/// (correctness path; the acceptance-critical models all use unit weights).
unsafe fn produce_row_weighted(
    dst: &mut [u32],
    sources: &[(*const u32, i64)],
    weights: &[[u64; GROUP]],
    cells: usize,
    stride: usize,
    group_primes: &[u32; GROUP],
) -> [u64; GROUP] {
    let n = cells * GROUP;
    // Lane sums stay below 9 * 2^30 * 2^30 < 2^64 for at most nine steps.
    debug_assert!(sources.len() <= 9);
    let mut total = [0u64; GROUP];
    let full_end = if n + GROUP <= stride { cells } else { cells - 1 };
    for x in 0..cells {
        let mut accv = [0u64; GROUP];
        for (si, &(src, dx)) in sources.iter().enumerate() {
            if (x == 0 && dx > 0) || (x >= full_end && dx < 0) {
                continue;
            }
            let w = &weights[si];
            let off = (x as i64 - dx) as usize * GROUP;
            for (g, a) in accv.iter_mut().enumerate() {
                *a += w[g] * unsafe { *src.add(off + g) } as u64;
            }
        }
        for (g, a) in accv.iter().enumerate() {
            let v = (a % group_primes[g] as u64) as u32;
            dst[x * GROUP + g] = v;
            total[g] += v as u64;
        }
    }
    let pad_end = (n + 3 * GROUP).min(stride);
    dst[n..pad_end].iter_mut().for_each(|c| *c = 0);
    total
}

/// Enough 30-bit primes that their product exceeds weight_sum^k with margin.
fn primes_for(weight_sum: &BigInt, k: usize) -> Vec<u32> {
    let log2_w = if weight_sum.is_one() {
        0.0
    } else {
        let bits = weight_sum.bits();
        let shift = bits.saturating_sub(53);
        ((weight_sum >> shift).to_f64().unwrap()).log2() + shift as f64
    };
    let need_bits = (k as f64) * log2_w + 16.0;
    let mut primes = Vec::new();
    let mut have_bits = 0.0f64;
    let mut candidate = (1u32 << 30) - 1;
    while have_bits < need_bits || primes.len() < 2 {
        while !is_prime_u32(candidate) {
            candidate -= 2;
        }
        primes.push(candidate);
        have_bits += (candidate as f64).log2();
        candidate -= 2;
    }
    primes
}

fn is_prime_u32(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u32, 3, 5, 7] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    // Deterministic Miller-Rabin for n < 3,215,031,751 with bases 2,3,5,7.
    let n64 = n as u64;
    let d = (n64 - 1) >> (n64 - 1).trailing_zeros();
    let s = (n64 - 1).trailing_zeros();
    'witness: for a in [2u64, 3, 5, 7] {
        let mut x = pow_mod_u64(a, d, n64);
        if x == 1 || x == n64 - 1 {
            continue;
        }
        for _ in 1..s {
            x = (x * x) % n64;
            if x == n64 - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pow_mod_u64(mut base: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        e >>= 1;
    }
    acc
}

fn mod_inverse(a: u64, m: u64) -> u64 {
    // Extended Euclid; m is prime and a != 0 mod m.
    let (mut old_r, mut r) = (a as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        let t = old_r - q * r;
        old_r = r;
        r = t;
        let t = old_s - q * s;
        old_s = s;
        s = t;
    }
    old_s.rem_euclid(m as i128) as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn miller_rabin_agrees_with_trial_division() {
        for n in 2u32..2000 {
            let by_trial = (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0);
            assert_eq!(is_prime_u32(n), by_trial, "n = {n}");
        }
        assert!(is_prime_u32((1 << 30) - 35)); // 1073741789
        assert!(!is_prime_u32((1 << 30) - 1));
    }

    #[test]
    fn simple_walk_small_lengths() {
        // {N,S,E,W} from the origin: 1, 2, 6, 18, 60 walks (quadrant).
        let steps: Vec<(i8, i8, BigInt)> = [(1, 0), (-1, 0), (0, 1), (0, -1)]
            .iter()
            .map(|&(dx, dy)| (dx, dy, BigInt::one()))
            .collect();
        let mc = quadrant_mod_counts(&steps, (0, 0), 10);
        let got: Vec<BigInt> = (0..=4)
            .map(|k| mc.reconstruct(FilterKind::Anywhere, k))
            .collect();
        let want: Vec<BigInt> = [1, 2, 6, 18, 60].iter().map(|&v| BigInt::from(v)).collect();
        assert_eq!(got, want);
        // Excursions of odd length vanish; length 2 has 2, length 4 has 10.
        assert_eq!(mc.reconstruct(FilterKind::Origin, 3), BigInt::zero());
        assert_eq!(mc.reconstruct(FilterKind::Origin, 2), BigInt::from(2));
        assert_eq!(mc.reconstruct(FilterKind::Origin, 4), BigInt::from(10));
    }

    #[test]
    fn weighted_kernel_matches_unit_kernel() {
        // The same model counted twice: once with a weight-3 south step
        // (weighted kernel), once with that step split into weight-2 plus
        // weight-1 copies, which also exercises duplicate directions.
        let mut merged: Vec<(i8, i8, BigInt)> = [(1, 0), (-1, 0), (0, 1)]
            .iter()
            .map(|&(dx, dy)| (dx, dy, BigInt::one()))
            .collect();
        let mut split = merged.clone();
        merged.push((0, -1, BigInt::from(3u32)));
        split.push((0, -1, BigInt::from(2u32)));
        split.push((0, -1, BigInt::one()));

        let a = quadrant_mod_counts(&merged, (1, 2), 9);
        let b = quadrant_mod_counts(&split, (1, 2), 9);
        for len in 0..=9 {
            for filter in [
                FilterKind::Anywhere,
                FilterKind::Origin,
                FilterKind::XAxis,
                FilterKind::YAxis,
            ] {
                assert_eq!(
                    a.reconstruct(filter, len),
                    b.reconstruct(filter, len),
                    "len {len}, {filter:?}"
                );
            }
        }
    }

    #[test]
    fn garner_reconstruction_exceeds_single_prime() {
        // 3^k grows past any single prime; check an exact large value.
        let steps: Vec<(i8, i8, BigInt)> = vec![(0, 1, BigInt::from(3u32))];
        let mc = quadrant_mod_counts(&steps, (0, 0), 64);
        assert_eq!(
            mc.reconstruct(FilterKind::Anywhere, 64),
            BigInt::from(3u32).pow(64)
        );
    }
}
