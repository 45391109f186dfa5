//! Restart hill climbing on the total number of monochromatic triangles,
//! plus exhaustive minimization for tiny instances.
//!
//! Randomness comes from `ChaCha8Rng::seed_from_u64(seed)`; restart `r`
//! reads stream `r` of that generator (initial coloring first, then plateau
//! choices). [`random_coloring`] reads stream 0, so restart 0 starts from
//! `random_coloring(n, k, seed)`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::color::Color;
use crate::coloring::{edge_count, edges, EdgeColoring, MAX_VERTICES};
use crate::error::{Error, Result};

/// Default cap on `k^C(n,2)` for [`exhaustive_min`]: 2^25.
pub const DEFAULT_EXHAUSTIVE_BUDGET: u128 = 1 << 25;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchParams {
    pub n: usize,
    pub k: usize,
    pub seed: u64,
    pub restarts: usize,
    pub steps_per_restart: usize,
    /// Consecutive steps without a new restart best tolerated before a restart gives up.
    pub sideways_limit: usize,
}

impl SearchParams {
    pub fn new(n: usize, k: usize, seed: u64) -> SearchParams {
        SearchParams { n, k, seed, restarts: 20, steps_per_restart: 20_000, sideways_limit: 1_000 }
    }

    pub fn validate(&self) -> Result<()> {
        Color::palette(self.k)?;
        if self.n == 0 || self.restarts == 0 || self.steps_per_restart == 0 || self.sideways_limit == 0 {
            return Err(Error::Domain("search counts must be positive".into()));
        }
        if self.n > MAX_VERTICES {
            return Err(Error::Capacity { n: self.n, max: MAX_VERTICES });
        }
        Ok(())
    }
}

/// Per-restart record: total after every improving move, ending at the restart's best.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RestartTrace {
    pub start: usize,
    pub improvements: Vec<usize>,
    pub best: usize,
    pub steps: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchResult {
    pub best: EdgeColoring,
    pub best_count: usize,
    pub best_restart: usize,
    pub trace: Vec<RestartTrace>,
    /// Number of candidate moves scored.
    pub evaluations: u64,
}

fn restart_rng(seed: u64, restart: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(restart as u64);
    rng
}

fn draw_coloring(n: usize, palette: &[Color], rng: &mut ChaCha8Rng) -> Result<EdgeColoring> {
    let colors = (0..edge_count(n)).map(|_| palette[rng.gen_range(0..palette.len())]).collect();
    EdgeColoring::new(n, colors)
}

/// Each edge uniform over the first `k` colors; bit-identical for equal arguments.
pub fn random_coloring(n: usize, k: usize, seed: u64) -> Result<EdgeColoring> {
    let palette = Color::palette(k)?;
    draw_coloring(n, palette, &mut restart_rng(seed, 0))
}

/// Mutable coloring with per-color bit rows for O(1) move scoring.
struct Board {
    n: usize,
    colors: Vec<Color>,
    rows: Vec<[u64; 3]>,
    endpoints: Vec<(usize, usize)>,
    mono: usize,
}

impl Board {
    fn new(c: &EdgeColoring) -> Result<Board> {
        let rows = c.color_rows()?;
        let mono = c.fast_mono_counts()?.iter().sum();
        Ok(Board {
            n: c.n(),
            colors: c.colors().to_vec(),
            rows,
            endpoints: edges(c.n()).map(|(_, i, j)| (i, j)).collect(),
            mono,
        })
    }

    /// Common `x`-neighbours of the endpoints of `edge`.
    #[inline]
    fn common(&self, edge: usize, x: Color) -> i64 {
        let (u, v) = self.endpoints[edge];
        (self.rows[u][x.index()] & self.rows[v][x.index()]).count_ones() as i64
    }

    #[inline]
    fn delta(&self, edge: usize, x: Color) -> i64 {
        self.common(edge, x) - self.common(edge, self.colors[edge])
    }

    fn apply(&mut self, edge: usize, x: Color) {
        let d = self.delta(edge, x);
        let (u, v) = self.endpoints[edge];
        let old = self.colors[edge].index();
        self.rows[u][old] &= !(1 << v);
        self.rows[v][old] &= !(1 << u);
        self.rows[u][x.index()] |= 1 << v;
        self.rows[v][x.index()] |= 1 << u;
        self.colors[edge] = x;
        self.mono = (self.mono as i64 + d) as usize;
    }

    fn to_coloring(&self) -> EdgeColoring {
        EdgeColoring::new(self.n, self.colors.clone()).expect("board keeps a full edge list")
    }
}

/// Change in the total monochromatic count if `edge` is recolored to `x`.
pub fn move_delta(c: &EdgeColoring, edge: usize, x: Color) -> Result<i64> {
    if edge >= c.colors().len() {
        return Err(Error::Domain(format!("edge ordinal {edge} out of range for K_{}", c.n())));
    }
    if c.color_at(edge) == x {
        return Err(Error::NoOpMove { edge });
    }
    Ok(Board::new(c)?.delta(edge, x))
}

/// Restart hill climbing with a short tabu memory.
///
/// Each step scores every single-edge recolor. An edge changed within the
/// last `n / 3 + 1` steps is tabu unless the move would beat the restart's best.
/// The best admissible strictly improving move is taken (ties: lowest edge
/// ordinal, then color order). With none available, the least-bad
/// admissible move is taken instead, ties drawn uniformly from the restart's
/// stream. A restart ends after `steps_per_restart` steps, after
/// `sideways_limit` consecutive steps without a new restart best, or when
/// every move is tabu. Reaching zero ends the whole search.
pub fn minimize(p: &SearchParams) -> Result<SearchResult> {
    p.validate()?;
    let palette = Color::palette(p.k)?;
    let m = edge_count(p.n);
    let tenure = p.n / 3 + 1;
    let mut best: Option<(usize, usize, EdgeColoring)> = None;
    let mut trace = Vec::with_capacity(p.restarts);
    let mut evaluations = 0u64;
    let mut ties: Vec<(usize, Color)> = Vec::new();

    for restart in 0..p.restarts {
        let mut rng = restart_rng(p.seed, restart);
        let mut board = Board::new(&draw_coloring(p.n, palette, &mut rng)?)?;
        let mut record = RestartTrace { start: board.mono, improvements: Vec::new(), best: board.mono, steps: 0 };
        let mut best_here = board.to_coloring();
        let mut last_changed = vec![usize::MAX; m];
        let mut stale = 0usize;

        while record.steps < p.steps_per_restart && board.mono > 0 && stale < p.sideways_limit {
            let target = record.best as i64 - board.mono as i64;
            let mut improving: Option<(i64, usize, Color)> = None;
            let mut least_bad = i64::MAX;
            ties.clear();
            #[allow(clippy::needless_range_loop)]
            for e in 0..m {
                let current = board.colors[e];
                let base = board.common(e, current);
                let tabu = last_changed[e] != usize::MAX && record.steps - last_changed[e] < tenure;
                for &x in palette.iter().filter(|&&x| x != current) {
                    evaluations += 1;
                    let d = board.common(e, x) - base;
                    if tabu && d >= target {
                        continue;
                    }
                    if d < 0 {
                        if improving.is_none_or(|(bd, _, _)| d < bd) {
                            improving = Some((d, e, x));
                        }
                    } else if improving.is_none() {
                        if d < least_bad {
                            least_bad = d;
                            ties.clear();
                        }
                        if d == least_bad {
                            ties.push((e, x));
                        }
                    }
                }
            }
            let (e, x) = match improving {
                Some((_, e, x)) => (e, x),
                None if !ties.is_empty() => ties[rng.gen_range(0..ties.len())],
                None => break,
            };
            board.apply(e, x);
            last_changed[e] = record.steps;
            record.steps += 1;
            if board.mono < record.best {
                record.best = board.mono;
                record.improvements.push(board.mono);
                best_here = board.to_coloring();
                stale = 0;
            } else {
                stale += 1;
            }
        }

        let found = record.best;
        trace.push(record);
        if best.as_ref().is_none_or(|(count, _, _)| found < *count) {
            best = Some((found, restart, best_here));
        }
        if found == 0 {
            break;
        }
    }

    let (best_count, best_restart, best) = best.expect("at least one restart");
    Ok(SearchResult { best, best_count, best_restart, trace, evaluations })
}

/// Minimum total monochromatic count over every coloring of `K_n` with `k`
/// colors, and the first minimizer in lexicographic order of color strings.
///
/// The first edge is fixed to Blue, which loses nothing since any coloring can
/// be color-permuted to start with Blue without changing its count. The
/// depth-first walk prunes branches whose partial count cannot beat the
/// incumbent; that never discards a strictly better or earlier minimizer.
pub fn exhaustive_min(n: usize, k: usize, budget: u128) -> Result<(usize, EdgeColoring)> {
    let palette = Color::palette(k)?;
    if n > MAX_VERTICES {
        return Err(Error::Capacity { n, max: MAX_VERTICES });
    }
    let m = edge_count(n);
    let states = (k as u128).checked_pow(m as u32).unwrap_or(u128::MAX);
    if states > budget {
        return Err(Error::OverBudget { states, budget });
    }
    let mut walk = Exhaustive {
        palette,
        endpoints: edges(n).map(|(_, i, j)| (i, j)).collect(),
        rows: vec![[0; 3]; n],
        current: Vec::with_capacity(m),
        best: usize::MAX,
        witness: Vec::new(),
    };
    if m == 0 {
        return Ok((0, EdgeColoring::new(n, Vec::new())?));
    }
    walk.place(0, Color::Blue);
    walk.descend(0);
    Ok((walk.best, EdgeColoring::new(n, walk.witness)?))
}

struct Exhaustive {
    palette: &'static [Color],
    endpoints: Vec<(usize, usize)>,
    rows: Vec<[u64; 3]>,
    current: Vec<Color>,
    best: usize,
    witness: Vec<Color>,
}

impl Exhaustive {
    fn place(&mut self, edge: usize, x: Color) -> usize {
        let (u, v) = self.endpoints[edge];
        let xi = x.index();
        let closed = (self.rows[u][xi] & self.rows[v][xi]).count_ones() as usize;
        self.rows[u][xi] |= 1 << v;
        self.rows[v][xi] |= 1 << u;
        self.current.push(x);
        closed
    }

    fn unplace(&mut self, edge: usize) {
        let (u, v) = self.endpoints[edge];
        let xi = self.current.pop().unwrap().index();
        self.rows[u][xi] &= !(1 << v);
        self.rows[v][xi] &= !(1 << u);
    }

    /// `current` holds edges `0..=last`; `count` is their monochromatic total.
    fn descend(&mut self, count: usize) {
        if count >= self.best {
            return;
        }
        let next = self.current.len();
        if next == self.endpoints.len() {
            self.best = count;
            self.witness = self.current.clone();
            return;
        }
        for &x in self.palette {
            let closed = self.place(next, x);
            self.descend(count + closed);
            self.unplace(next);
        }
    }
}
