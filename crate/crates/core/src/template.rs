//! Partial colorings with per-edge color domains and functional coupling
//! constraints, plus a backtracking completion search.

use crate::color::{Color, ColorPerm};
use crate::coloring::{edge_count, edge_index, edges, ordinal, EdgeColoring, MonoTriangle, MAX_VERTICES};
use crate::error::{Error, Result};

/// A nonempty subset of the three colors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Domain(u8);

impl Domain {
    pub const FULL: Domain = Domain(0b111);

    pub const fn single(c: Color) -> Domain {
        Domain(1 << c as u8)
    }

    pub fn of(colors: &[Color]) -> Result<Domain> {
        let bits = colors.iter().fold(0u8, |acc, &c| acc | 1 << c.index());
        if bits == 0 {
            return Err(Error::Domain("empty color domain".into()));
        }
        Ok(Domain(bits))
    }

    #[inline]
    pub fn contains(self, c: Color) -> bool {
        self.0 & (1 << c.index()) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// The color if this domain is a singleton.
    pub fn singleton(self) -> Option<Color> {
        (self.len() == 1).then(|| Color::from_index(self.0.trailing_zeros() as usize).unwrap())
    }

    /// Members in Blue < Red < Yellow order.
    pub fn colors(self) -> impl Iterator<Item = Color> {
        Color::ALL.into_iter().filter(move |&c| self.contains(c))
    }
}

/// `color(target) = map(color(source))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Coupling {
    pub source: usize,
    pub target: usize,
    pub map: ColorPerm,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoringTemplate {
    n: usize,
    domains: Vec<Domain>,
    couplings: Vec<Coupling>,
}

impl ColoringTemplate {
    /// Every edge open, no couplings.
    pub fn unconstrained(n: usize) -> Result<ColoringTemplate> {
        if n == 0 {
            return Err(Error::Domain("a template needs at least one vertex".into()));
        }
        Ok(ColoringTemplate { n, domains: vec![Domain::FULL; edge_count(n)], couplings: Vec::new() })
    }

    pub fn from_domains(n: usize, domains: Vec<Domain>) -> Result<ColoringTemplate> {
        let mut t = ColoringTemplate::unconstrained(n)?;
        if domains.len() != t.domains.len() {
            return Err(Error::LengthMismatch { expected: t.domains.len(), got: domains.len() });
        }
        if domains.iter().any(|d| d.is_empty()) {
            return Err(Error::Domain("empty color domain".into()));
        }
        t.domains = domains;
        Ok(t)
    }

    /// All-singleton template equal to `c`.
    pub fn from_coloring(c: &EdgeColoring) -> ColoringTemplate {
        ColoringTemplate {
            n: c.n(),
            domains: c.colors().iter().map(|&x| Domain::single(x)).collect(),
            couplings: Vec::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn domains(&self) -> &[Domain] {
        &self.domains
    }

    pub fn couplings(&self) -> &[Coupling] {
        &self.couplings
    }

    pub fn domain(&self, u: usize, v: usize) -> Result<Domain> {
        let (i, j) = if u < v { (u, v) } else { (v, u) };
        Ok(self.domains[edge_index(i, j, self.n)?])
    }

    pub fn set_domain(&mut self, u: usize, v: usize, d: Domain) -> Result<()> {
        let (i, j) = if u < v { (u, v) } else { (v, u) };
        let e = edge_index(i, j, self.n)?;
        if d.is_empty() {
            return Err(Error::Domain("empty color domain".into()));
        }
        self.domains[e] = d;
        Ok(())
    }

    /// Requires `color(target edge) = map(color(source edge))`.
    pub fn couple(&mut self, source: (usize, usize), target: (usize, usize), map: ColorPerm) -> Result<()> {
        let ord = |(u, v): (usize, usize)| {
            let (i, j) = if u < v { (u, v) } else { (v, u) };
            edge_index(i, j, self.n)
        };
        let coupling = Coupling { source: ord(source)?, target: ord(target)?, map };
        self.couplings.push(coupling);
        Ok(())
    }

    /// Ordinals of edges whose domain is not a singleton.
    pub fn open_edges(&self) -> Vec<usize> {
        (0..self.domains.len()).filter(|&e| self.domains[e].singleton().is_none()).collect()
    }

    /// The coloring, if every domain is a singleton.
    pub fn to_coloring(&self) -> Option<EdgeColoring> {
        let colors: Option<Vec<Color>> = self.domains.iter().map(|d| d.singleton()).collect();
        colors.map(|colors| EdgeColoring::new(self.n, colors).expect("length checked at construction"))
    }

    /// Monochromatic triangles whose three edges are all fixed, ignoring any
    /// triangle that touches an open edge.
    pub fn fixed_mono_triangles(&self) -> Vec<MonoTriangle> {
        let n = self.n;
        let fixed = |i: usize, j: usize| self.domains[ordinal(i, j, n)].singleton();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let Some(a) = fixed(i, j) else { continue };
                for k in j + 1..n {
                    if fixed(i, k) == Some(a) && fixed(j, k) == Some(a) {
                        out.push(MonoTriangle { vertices: [i, j, k], color: a });
                    }
                }
            }
        }
        out
    }

    /// Whether `c` respects every domain and coupling of this template.
    pub fn admits(&self, c: &EdgeColoring) -> bool {
        c.n() == self.n
            && c.colors().iter().zip(&self.domains).all(|(&x, d)| d.contains(x))
            && self.couplings.iter().all(|k| c.color_at(k.target) == k.map.apply(c.color_at(k.source)))
    }

    /// Triangle-free completions, at most `limit` of them.
    ///
    /// Edges are assigned in ordinal order with colors tried Blue, Red,
    /// Yellow. Assigning an edge immediately propagates through the coupling
    /// graph, and any assignment that closes a monochromatic triangle with
    /// already-assigned edges is rejected. The first solution is the
    /// canonical one.
    pub fn solve(&self, limit: usize) -> Result<Vec<EdgeColoring>> {
        if self.n > MAX_VERTICES {
            return Err(Error::Capacity { n: self.n, max: MAX_VERTICES });
        }
        let mut solver = Solver::new(self);
        if limit > 0 {
            solver.search(0, limit);
        }
        Ok(solver.solutions)
    }
}

struct Solver<'a> {
    template: &'a ColoringTemplate,
    endpoints: Vec<(usize, usize)>,
    /// Both directions of every coupling.
    links: Vec<Vec<(usize, ColorPerm)>>,
    assigned: Vec<Option<Color>>,
    rows: Vec<[u64; 3]>,
    trail: Vec<usize>,
    queue: Vec<(usize, Color)>,
    solutions: Vec<EdgeColoring>,
}

impl<'a> Solver<'a> {
    fn new(template: &'a ColoringTemplate) -> Solver<'a> {
        let m = template.domains.len();
        let mut links = vec![Vec::new(); m];
        for k in &template.couplings {
            links[k.source].push((k.target, k.map));
            links[k.target].push((k.source, k.map.inverse()));
        }
        Solver {
            template,
            endpoints: edges(template.n).map(|(_, i, j)| (i, j)).collect(),
            links,
            assigned: vec![None; m],
            rows: vec![[0; 3]; template.n],
            trail: Vec::new(),
            queue: Vec::new(),
            solutions: Vec::new(),
        }
    }

    /// Assigns `edge` and everything coupled to it. On failure the partial
    /// group stays on the trail for the caller to undo.
    fn assign(&mut self, edge: usize, color: Color) -> bool {
        self.queue.clear();
        self.queue.push((edge, color));
        while let Some((e, c)) = self.queue.pop() {
            if let Some(existing) = self.assigned[e] {
                if existing != c {
                    return false;
                }
                continue;
            }
            let (u, v) = self.endpoints[e];
            let ci = c.index();
            if !self.template.domains[e].contains(c) || self.rows[u][ci] & self.rows[v][ci] != 0 {
                return false;
            }
            self.assigned[e] = Some(c);
            self.rows[u][ci] |= 1 << v;
            self.rows[v][ci] |= 1 << u;
            self.trail.push(e);
            for &(t, map) in &self.links[e] {
                self.queue.push((t, map.apply(c)));
            }
        }
        true
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let e = self.trail.pop().unwrap();
            let c = self.assigned[e].take().unwrap().index();
            let (u, v) = self.endpoints[e];
            self.rows[u][c] &= !(1 << v);
            self.rows[v][c] &= !(1 << u);
        }
    }

    /// Returns true once `limit` solutions are collected.
    fn search(&mut self, from: usize, limit: usize) -> bool {
        let Some(edge) = (from..self.assigned.len()).find(|&e| self.assigned[e].is_none()) else {
            let colors = self.assigned.iter().map(|c| c.unwrap()).collect();
            self.solutions.push(EdgeColoring::new(self.template.n, colors).unwrap());
            return self.solutions.len() >= limit;
        };
        for c in self.template.domains[edge].colors() {
            let mark = self.trail.len();
            let done = self.assign(edge, c) && self.search(edge + 1, limit);
            self.undo(mark);
            if done {
                return true;
            }
        }
        false
    }
}
