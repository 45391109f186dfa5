//! Edge colorings of complete graphs and exact triangle accounting.
//!
//! Edges of `K_n` are stored in lexicographic order of `(i, j)` with `i < j`:
//! `(0,1), (0,2), ..., (0,n-1), (1,2), ...`. The brute-force [`census`] works
//! for any `n`; everything built on per-color bit rows is limited to
//! [`MAX_VERTICES`].
//!
//! [`census`]: EdgeColoring::census

use std::fmt::Write as _;

use sha2::{Digest, Sha256};

use crate::color::{Color, ColorPerm};
use crate::error::{Error, Result};

/// Ceiling for bit-row operations: one `u64` adjacency row per vertex and color.
pub const MAX_VERTICES: usize = 64;

/// `C(n, 2)`.
#[inline]
pub const fn edge_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// `C(n, 3)`.
#[inline]
pub const fn triangle_count(n: usize) -> usize {
    if n < 3 {
        0
    } else {
        n * (n - 1) * (n - 2) / 6
    }
}

/// Ordinal of edge `(i, j)` in `K_n`, `i < j < n`.
pub fn edge_index(i: usize, j: usize, n: usize) -> Result<usize> {
    if i >= j || j >= n {
        return Err(Error::InvalidEdge { i, j, n });
    }
    Ok(ordinal(i, j, n))
}

#[inline]
pub(crate) fn ordinal(i: usize, j: usize, n: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

/// Inverse of [`edge_index`].
pub fn edge_endpoints(edge: usize, n: usize) -> Result<(usize, usize)> {
    if edge >= edge_count(n) {
        return Err(Error::Domain(format!("edge ordinal {edge} out of range for K_{n}")));
    }
    let mut rest = edge;
    let mut i = 0;
    loop {
        let row = n - i - 1;
        if rest < row {
            return Ok((i, i + 1 + rest));
        }
        rest -= row;
        i += 1;
    }
}

/// Iterates `(ordinal, i, j)` over all edges of `K_n` in ordinal order.
pub fn edges(n: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..n)
        .flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
        .enumerate()
        .map(|(e, (i, j))| (e, i, j))
}

/// A monochromatic triangle `i < j < k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MonoTriangle {
    pub vertices: [usize; 3],
    pub color: Color,
}

/// Full triangle partition of a coloring.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TriangleCensus {
    /// Monochromatic counts indexed by [`Color::index`].
    pub mono: [usize; 3],
    pub bichromatic: usize,
    pub rainbow: usize,
    /// Sorted lexicographically by vertex triple.
    pub mono_list: Vec<MonoTriangle>,
}

impl TriangleCensus {
    pub fn total_mono(&self) -> usize {
        self.mono.iter().sum()
    }

    pub fn total(&self) -> usize {
        self.total_mono() + self.bichromatic + self.rainbow
    }

    pub fn is_triangle_free(&self) -> bool {
        self.total_mono() == 0
    }
}

/// A total assignment of colors to the edges of `K_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeColoring {
    n: usize,
    colors: Vec<Color>,
}

impl EdgeColoring {
    pub fn new(n: usize, colors: Vec<Color>) -> Result<EdgeColoring> {
        if n == 0 {
            return Err(Error::Domain("a coloring needs at least one vertex".into()));
        }
        if colors.len() != edge_count(n) {
            return Err(Error::LengthMismatch { expected: edge_count(n), got: colors.len() });
        }
        Ok(EdgeColoring { n, colors })
    }

    pub fn uniform(n: usize, color: Color) -> Result<EdgeColoring> {
        EdgeColoring::new(n, vec![color; edge_count(n)])
    }

    /// Builds a coloring from a function of the endpoints `(i, j)`, `i < j`.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Color) -> Result<EdgeColoring> {
        EdgeColoring::new(n, edges(n).map(|(_, i, j)| f(i, j)).collect())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    /// Color of edge `{u, v}` in either orientation.
    #[inline]
    pub fn get(&self, u: usize, v: usize) -> Color {
        let (i, j) = if u < v { (u, v) } else { (v, u) };
        self.colors[ordinal(i, j, self.n)]
    }

    pub fn try_get(&self, u: usize, v: usize) -> Result<Color> {
        let (i, j) = if u < v { (u, v) } else { (v, u) };
        edge_index(i, j, self.n).map(|e| self.colors[e])
    }

    #[inline]
    pub fn color_at(&self, edge: usize) -> Color {
        self.colors[edge]
    }

    /// Recolors one edge by ordinal.
    pub fn set(&mut self, edge: usize, color: Color) {
        self.colors[edge] = color;
    }

    /// Smallest `k` such that only the first `k` colors appear (at least 2).
    pub fn colors_used(&self) -> usize {
        let max = self.colors.iter().map(|c| c.index()).max().unwrap_or(0);
        (max + 1).max(2)
    }

    /// Brute-force census over all `C(n, 3)` triples.
    pub fn census(&self) -> TriangleCensus {
        let n = self.n;
        let mut census = TriangleCensus::default();
        for i in 0..n {
            for j in i + 1..n {
                let cij = self.get(i, j);
                for k in j + 1..n {
                    let cik = self.get(i, k);
                    let cjk = self.get(j, k);
                    if cij == cik && cik == cjk {
                        census.mono[cij.index()] += 1;
                        census.mono_list.push(MonoTriangle { vertices: [i, j, k], color: cij });
                    } else if cij != cik && cik != cjk && cij != cjk {
                        census.rainbow += 1;
                    } else {
                        census.bichromatic += 1;
                    }
                }
            }
        }
        census
    }

    /// Per-color adjacency rows: `rows[v][c]` has bit `w` set iff `{v, w}` has color `c`.
    pub fn color_rows(&self) -> Result<Vec<[u64; 3]>> {
        if self.n > MAX_VERTICES {
            return Err(Error::Capacity { n: self.n, max: MAX_VERTICES });
        }
        let mut rows = vec![[0u64; 3]; self.n];
        for (e, i, j) in edges(self.n) {
            let c = self.colors[e].index();
            rows[i][c] |= 1 << j;
            rows[j][c] |= 1 << i;
        }
        Ok(rows)
    }

    /// Monochromatic counts per color via bit rows. For each edge `(i, j)` of
    /// color `c`, counts common `c`-neighbours `k > j`, so each triangle is
    /// seen exactly once from its two lowest vertices.
    pub fn fast_mono_counts(&self) -> Result<[usize; 3]> {
        let rows = self.color_rows()?;
        let mut mono = [0usize; 3];
        for (e, i, j) in edges(self.n) {
            let c = self.colors[e].index();
            let above = if j + 1 >= 64 { 0 } else { !0u64 << (j + 1) };
            mono[c] += (rows[i][c] & rows[j][c] & above).count_ones() as usize;
        }
        Ok(mono)
    }

    pub fn permute_colors(&self, perm: &ColorPerm) -> EdgeColoring {
        EdgeColoring { n: self.n, colors: self.colors.iter().map(|&c| perm.apply(c)).collect() }
    }

    /// Relabels vertices: the result colors `(rho[i], rho[j])` like `(i, j)` here.
    pub fn permute_vertices(&self, rho: &[usize]) -> Result<EdgeColoring> {
        let n = self.n;
        if rho.len() != n {
            return Err(Error::LengthMismatch { expected: n, got: rho.len() });
        }
        let mut seen = vec![false; n];
        for &v in rho {
            if v >= n || std::mem::replace(&mut seen[v], true) {
                return Err(Error::Domain("vertex map is not a permutation".into()));
            }
        }
        let mut colors = vec![Color::Blue; self.colors.len()];
        for (e, i, j) in edges(n) {
            let (a, b) = (rho[i], rho[j]);
            let (a, b) = if a < b { (a, b) } else { (b, a) };
            colors[ordinal(a, b, n)] = self.colors[e];
        }
        Ok(EdgeColoring { n, colors })
    }

    /// Removes vertex `v` and its edges; vertices above `v` shift down by one.
    pub fn delete_vertex(&self, v: usize) -> Result<EdgeColoring> {
        if v >= self.n || self.n < 2 {
            return Err(Error::VertexOutOfRange { v, n: self.n });
        }
        let keep: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        EdgeColoring::from_fn(self.n - 1, |i, j| self.get(keep[i], keep[j]))
    }

    /// Number of edges of each color at `v`.
    pub fn color_degree_profile(&self, v: usize) -> Result<[usize; 3]> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange { v, n: self.n });
        }
        let mut profile = [0usize; 3];
        for w in (0..self.n).filter(|&w| w != v) {
            profile[self.get(v, w).index()] += 1;
        }
        Ok(profile)
    }

    /// Relabeling-invariant digest of sorted degree profiles and census counts.
    /// Different tokens prove non-isomorphism; equal tokens prove nothing.
    pub fn fingerprint(&self) -> Fingerprint {
        let mut profiles: Vec<[usize; 3]> =
            (0..self.n).map(|v| self.color_degree_profile(v).expect("vertex in range")).collect();
        profiles.sort_unstable();
        let census = self.census();
        let mut summary = format!("n={};", self.n);
        for p in &profiles {
            let _ = write!(summary, "{},{},{};", p[0], p[1], p[2]);
        }
        let _ = write!(
            summary,
            "mono={},{},{};bi={};rainbow={}",
            census.mono[0], census.mono[1], census.mono[2], census.bichromatic, census.rainbow
        );
        let digest = Sha256::digest(summary.as_bytes());
        Fingerprint(digest[..8].iter().map(|b| format!("{b:02x}")).collect())
    }

    /// Colors as a `B`/`R`/`Y` string in edge-ordinal order.
    pub fn to_color_string(&self) -> String {
        self.colors.iter().map(|c| c.as_char()).collect()
    }
}

/// Hex token returned by [`EdgeColoring::fingerprint`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fingerprint(pub String);

impl std::fmt::Display for Fingerprint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Color::*;

    fn k3(a: Color, b: Color, c: Color) -> EdgeColoring {
        EdgeColoring::new(3, vec![a, b, c]).unwrap()
    }

    #[test]
    fn edge_index_examples() {
        assert_eq!(edge_index(0, 1, 17).unwrap(), 0);
        assert_eq!(edge_index(0, 16, 17).unwrap(), 15);
        assert_eq!(edge_index(15, 16, 17).unwrap(), 135);
        assert!(edge_index(3, 3, 17).is_err());
        assert!(edge_index(4, 2, 17).is_err());
        assert!(edge_index(2, 17, 17).is_err());
    }

    #[test]
    fn edge_index_is_lexicographic_bijection() {
        for n in 1..12 {
            for (e, i, j) in edges(n) {
                assert_eq!(edge_index(i, j, n).unwrap(), e);
                assert_eq!(edge_endpoints(e, n).unwrap(), (i, j));
            }
            assert!(edge_endpoints(edge_count(n), n).is_err());
        }
    }

    #[test]
    fn census_k3() {
        let c = k3(Blue, Blue, Blue).census();
        assert_eq!((c.mono, c.bichromatic, c.rainbow), ([1, 0, 0], 0, 0));
        assert_eq!(c.mono_list, vec![MonoTriangle { vertices: [0, 1, 2], color: Blue }]);
        let c = k3(Blue, Red, Yellow).census();
        assert_eq!((c.mono, c.bichromatic, c.rainbow), ([0, 0, 0], 0, 1));
        let c = k3(Blue, Red, Red).census();
        assert_eq!((c.mono, c.bichromatic, c.rainbow), ([0, 0, 0], 1, 0));
    }

    #[test]
    fn degenerate_sizes_have_empty_census() {
        for n in 1..3 {
            let c = EdgeColoring::uniform(n, Red).unwrap();
            assert_eq!(c.census(), TriangleCensus::default());
            assert_eq!(c.fast_mono_counts().unwrap(), [0, 0, 0]);
        }
        assert!(EdgeColoring::new(0, vec![]).is_err());
    }

    #[test]
    fn fast_counts_k3_and_capacity() {
        assert_eq!(k3(Red, Red, Red).fast_mono_counts().unwrap(), [0, 1, 0]);
        let big = EdgeColoring::uniform(65, Blue).unwrap();
        assert!(matches!(big.fast_mono_counts(), Err(Error::Capacity { n: 65, max: 64 })));
        let full = EdgeColoring::uniform(64, Blue).unwrap();
        assert_eq!(full.fast_mono_counts().unwrap(), [triangle_count(64), 0, 0]);
    }

    #[test]
    fn permute_colors_examples() {
        let c = k3(Blue, Red, Yellow);
        assert_eq!(c.permute_colors(&ColorPerm::IDENTITY), c);
        let red = k3(Red, Red, Red);
        assert_eq!(red.permute_colors(&ColorPerm::SIGMA), k3(Yellow, Yellow, Yellow));
    }

    #[test]
    fn swap_twice_is_identity() {
        let c = EdgeColoring::from_fn(5, |i, j| Color::ALL[(i * 2 + j) % 3]).unwrap();
        let swap = [0, 3, 2, 1, 4];
        let once = c.permute_vertices(&swap).unwrap();
        assert_eq!(once.get(1, 4), c.get(3, 4));
        assert_eq!(once.permute_vertices(&swap).unwrap(), c);
        assert_eq!(c.permute_vertices(&[0, 1, 2, 3, 4]).unwrap(), c);
        assert!(c.permute_vertices(&[0, 0, 1, 2, 3]).is_err());
    }

    #[test]
    fn delete_vertex_examples() {
        let c = k3(Blue, Blue, Blue).delete_vertex(2).unwrap();
        assert_eq!(c.n(), 2);
        assert_eq!(c.colors(), &[Blue]);
        assert!(k3(Blue, Blue, Blue).delete_vertex(3).is_err());
        let c = EdgeColoring::from_fn(4, |i, j| if i == 1 || j == 1 { Red } else { Blue }).unwrap();
        let d = c.delete_vertex(1).unwrap();
        assert_eq!(d, EdgeColoring::uniform(3, Blue).unwrap());
    }

    #[test]
    fn profile_examples() {
        assert_eq!(k3(Blue, Blue, Blue).color_degree_profile(0).unwrap(), [2, 0, 0]);
        assert!(k3(Blue, Blue, Blue).color_degree_profile(3).is_err());
    }

    #[test]
    fn fingerprint_distinguishes_colors() {
        let b = k3(Blue, Blue, Blue);
        assert_ne!(b.fingerprint(), k3(Red, Red, Red).fingerprint());
        assert_eq!(b.fingerprint(), b.clone().fingerprint());
        assert_eq!(b.fingerprint().0.len(), 16);
    }
}
