//! Vertex extensions and the K17 assembly over a shared triangle-free host.
//!
//! Two triangle-free extensions `ea`, `eb` of the same host give a coloring
//! of `K_{m+2}` minus the edge between the two new vertices in which no
//! triangle is monochromatic. Coloring that edge `x` creates exactly one
//! monochromatic triangle `{new_a, new_b, v}` for every host vertex `v` with
//! `ea[v] = eb[v] = x`.

use crate::color::Color;
use crate::coloring::{EdgeColoring, TriangleCensus, MAX_VERTICES};
use crate::constructions::construct_gf16;
use crate::error::{Error, Result};
use crate::template::{ColoringTemplate, Domain};

/// Spoke colors from a new vertex to each existing vertex, in index order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexExtension {
    pub spokes: Vec<Color>,
}

impl VertexExtension {
    pub fn new(spokes: Vec<Color>) -> VertexExtension {
        VertexExtension { spokes }
    }

    /// The spokes of vertex `v` in `c`, skipping `v` itself.
    pub fn of_vertex(c: &EdgeColoring, v: usize) -> Result<VertexExtension> {
        if v >= c.n() {
            return Err(Error::VertexOutOfRange { v, n: c.n() });
        }
        Ok(VertexExtension { spokes: (0..c.n()).filter(|&w| w != v).map(|w| c.get(v, w)).collect() })
    }

    pub fn len(&self) -> usize {
        self.spokes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.spokes.is_empty()
    }

    pub fn to_color_string(&self) -> String {
        self.spokes.iter().map(|c| c.as_char()).collect()
    }
}

/// Outcome of coloring the open edge of an assembly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssemblyReport {
    pub coloring: EdgeColoring,
    pub added_edge: (usize, usize),
    pub added_edge_color: Color,
    pub census: TriangleCensus,
    pub triangles_through_new_edge: usize,
}

fn require_triangle_free(c: &EdgeColoring, what: &str) -> Result<()> {
    let mono = if c.n() <= MAX_VERTICES { c.fast_mono_counts()? } else { c.census().mono };
    if mono != [0, 0, 0] {
        return Err(Error::Precondition(format!("{what} has monochromatic triangles {mono:?}")));
    }
    Ok(())
}

/// Every spoke assignment that keeps `c` plus one new vertex triangle-free,
/// in depth-first order (vertices ascending, colors Blue < Red < Yellow).
pub fn find_extensions(c: &EdgeColoring) -> Result<Vec<VertexExtension>> {
    require_triangle_free(c, "host")?;
    let rows = c.color_rows()?;
    let mut out = Vec::new();
    let mut spokes = Vec::with_capacity(c.n());
    // masks[x]: host vertices already joined to the new vertex by color x
    let mut masks = [0u64; 3];
    extend_dfs(&rows, &mut spokes, &mut masks, &mut out);
    Ok(out)
}

fn extend_dfs(rows: &[[u64; 3]], spokes: &mut Vec<Color>, masks: &mut [u64; 3], out: &mut Vec<VertexExtension>) {
    let v = spokes.len();
    if v == rows.len() {
        out.push(VertexExtension { spokes: spokes.clone() });
        return;
    }
    for x in Color::ALL {
        let xi = x.index();
        if rows[v][xi] & masks[xi] != 0 {
            continue;
        }
        masks[xi] |= 1 << v;
        spokes.push(x);
        extend_dfs(rows, spokes, masks, out);
        spokes.pop();
        masks[xi] &= !(1 << v);
    }
}

/// Appends a vertex with index `c.n()` joined to vertex `v` by `e.spokes[v]`.
pub fn extend_with(c: &EdgeColoring, e: &VertexExtension) -> Result<EdgeColoring> {
    let n = c.n();
    if e.len() != n {
        return Err(Error::LengthMismatch { expected: n, got: e.len() });
    }
    EdgeColoring::from_fn(n + 1, |i, j| if j == n { e.spokes[i] } else { c.get(i, j) })
}

/// Host on vertices `0..m`, `ea` on vertex `m`, `eb` on vertex `m + 1`, and
/// the edge `(m, m + 1)` left open with the full domain.
pub fn assemble(host: &EdgeColoring, ea: &VertexExtension, eb: &VertexExtension) -> Result<ColoringTemplate> {
    require_triangle_free(host, "host")?;
    let m = host.n();
    for (name, e) in [("ext-a", ea), ("ext-b", eb)] {
        let extended = extend_with(host, e)?;
        require_triangle_free(&extended, &format!("host extended by {name}"))?;
    }
    let joined = EdgeColoring::from_fn(m + 2, |i, j| match j {
        _ if j < m => host.get(i, j),
        _ if j == m => ea.spokes[i],
        // (m, m + 1) gets a placeholder, opened below
        _ => eb.spokes.get(i).copied().unwrap_or(Color::Blue),
    })?;
    let mut t = ColoringTemplate::from_coloring(&joined);
    t.set_domain(m, m + 1, Domain::FULL)?;
    Ok(t)
}

/// Colors the single open edge of `t` with `x` and takes the census.
pub fn complete_edge(t: &ColoringTemplate, x: Color) -> Result<AssemblyReport> {
    let open = t.open_edges();
    let [edge] = open[..] else {
        return Err(Error::Precondition(format!("expected exactly one open edge, found {}", open.len())));
    };
    if t.domains()[edge] != Domain::FULL {
        return Err(Error::Precondition("the open edge must admit all three colors".into()));
    }
    let (u, v) = crate::coloring::edge_endpoints(edge, t.n())?;
    let colors = t
        .domains()
        .iter()
        .enumerate()
        .map(|(e, d)| if e == edge { x } else { d.singleton().unwrap() })
        .collect();
    let coloring = EdgeColoring::new(t.n(), colors)?;
    let census = coloring.census();
    let through = census.mono_list.iter().filter(|m| m.vertices.contains(&u) && m.vertices.contains(&v)).count();
    Ok(AssemblyReport { coloring, added_edge: (u, v), added_edge_color: x, census, triangles_through_new_edge: through })
}

/// Host vertices where both extensions use color `x`.
pub fn overlap(ea: &VertexExtension, eb: &VertexExtension, x: Color) -> usize {
    ea.spokes.iter().zip(&eb.spokes).filter(|&(&a, &b)| a == x && b == x).count()
}

/// The finite-field K16 with `deleted` removed, and the removed vertex's spokes.
pub fn gf16_host(deleted: usize) -> Result<(EdgeColoring, VertexExtension)> {
    let k16 = construct_gf16();
    Ok((k16.delete_vertex(deleted)?, VertexExtension::of_vertex(&k16, deleted)?))
}

/// K17 from two copies of a deleted finite-field vertex joined by an edge of color `x`.
pub fn twin_k17_at(deleted: usize, x: Color) -> Result<AssemblyReport> {
    let (host, spokes) = gf16_host(deleted)?;
    complete_edge(&assemble(&host, &spokes, &spokes)?, x)
}

pub fn twin_k17(x: Color) -> AssemblyReport {
    twin_k17_at(0, x).expect("vertex 0 exists")
}
