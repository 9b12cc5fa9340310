//! Sink-disk detection on sector-decomposed branched surfaces, and disk
//! detection in the complement of an arc system on a fiber surface.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Sector {
    pub id: usize,
    pub is_disk: bool,
    pub meets_boundary: bool,
}

/// A segment of the branch locus. `left` and `right` are the sectors on
/// the two sides of the locus on the cusped side, `branch` the optional
/// sector on the smooth side; the cusp points into `left` or `right`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LocusSegment {
    pub id: usize,
    pub left: usize,
    pub right: usize,
    pub branch: Option<usize>,
    pub cusp_into: usize,
}

impl LocusSegment {
    fn incident(&self) -> impl Iterator<Item = usize> + '_ {
        [Some(self.left), Some(self.right), self.branch].into_iter().flatten()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SectorComplex {
    sectors: Vec<Sector>,
    segments: Vec<LocusSegment>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SinkReport {
    pub sink_disks: Vec<usize>,
    pub half_sink_disks: Vec<usize>,
}

impl SinkReport {
    pub fn is_empty(&self) -> bool {
        self.sink_disks.is_empty() && self.half_sink_disks.is_empty()
    }
}

impl SectorComplex {
    pub fn new(sectors: Vec<Sector>, segments: Vec<LocusSegment>) -> Result<Self> {
        let ids: BTreeSet<usize> = sectors.iter().map(|s| s.id).collect();
        if ids.len() != sectors.len() {
            return Err(Error::MalformedIncidence("repeated sector id".into()));
        }
        let mut seg_ids = BTreeSet::new();
        for seg in &segments {
            if !seg_ids.insert(seg.id) {
                return Err(Error::MalformedIncidence(format!("repeated segment id {}", seg.id)));
            }
            if let Some(bad) = seg.incident().find(|s| !ids.contains(s)) {
                return Err(Error::MalformedIncidence(format!("segment {} names unknown sector {bad}", seg.id)));
            }
            if seg.cusp_into != seg.left && seg.cusp_into != seg.right {
                return Err(Error::MalformedIncidence(format!(
                    "segment {} cusps into {}, which is neither side",
                    seg.id, seg.cusp_into
                )));
            }
        }
        Ok(SectorComplex { sectors, segments })
    }

    pub fn sectors(&self) -> &[Sector] {
        &self.sectors
    }

    pub fn segments(&self) -> &[LocusSegment] {
        &self.segments
    }

    /// Sets the cusp direction of segment `segment` to point into `sector`.
    pub fn set_cusp(&mut self, segment: usize, sector: usize) -> Result<()> {
        let seg = self
            .segments
            .iter_mut()
            .find(|s| s.id == segment)
            .ok_or_else(|| Error::MalformedIncidence(format!("no segment {segment}")))?;
        if sector != seg.left && sector != seg.right {
            return Err(Error::MalformedIncidence(format!("segment {segment} does not border sector {sector}")));
        }
        seg.cusp_into = sector;
        Ok(())
    }

    /// Disk sectors into which every incident cusp points. Those meeting
    /// the boundary are reported as half sink disks.
    pub fn detect_sink_disks(&self) -> SinkReport {
        let mut incidences: BTreeMap<usize, Vec<&LocusSegment>> = BTreeMap::new();
        for seg in &self.segments {
            for s in seg.incident().collect::<BTreeSet<_>>() {
                incidences.entry(s).or_default().push(seg);
            }
        }
        let mut report = SinkReport::default();
        for sector in self.sectors.iter().filter(|s| s.is_disk) {
            let all_in = incidences
                .get(&sector.id)
                .is_none_or(|segs| segs.iter().all(|seg| seg.cusp_into == sector.id && seg.branch != Some(sector.id)));
            if all_in {
                if sector.meets_boundary {
                    report.half_sink_disks.push(sector.id);
                } else {
                    report.sink_disks.push(sector.id);
                }
            }
        }
        report
    }

    /// Shadow of the branched surface built from an arc system: the faces
    /// of the complement, a product disk `P_j` for each arc `α_j`, and a
    /// strip `S_j` between `α_j` and the parallel copy `β_i` of it
    /// (`π(i) = j`) pushed off to its left with reversed orientation.
    ///
    /// Cusps along `α_j` point to the left (into `S_j`); cusps along
    /// `β_i` point to the right (into the face beyond the strip).
    pub fn from_arc_system(ribbon: &ArcSystemRibbon, perm: &[usize]) -> Result<Self> {
        let k = ribbon.arcs().len();
        let mut seen = vec![false; k];
        if perm.len() != k || perm.iter().any(|&j| j >= k || std::mem::replace(&mut seen[j], true)) {
            return Err(Error::InconsistentPairing("arc bijection is not a permutation".into()));
        }
        let faces = ribbon.trace_complement_faces();
        let nf = faces.len();
        let product = |j: usize| nf + j;
        let strip = |j: usize| nf + k + j;
        let mut sectors: Vec<Sector> =
            faces.iter().map(|f| Sector { id: f.id, is_disk: f.is_disk, meets_boundary: true }).collect();
        for j in 0..k {
            sectors.push(Sector { id: product(j), is_disk: true, meets_boundary: true });
        }
        for j in 0..k {
            sectors.push(Sector { id: strip(j), is_disk: true, meets_boundary: true });
        }
        let mut segments = Vec::with_capacity(2 * k);
        for j in 0..k {
            let (_, right) = ribbon.arc_sides(j);
            segments.push(LocusSegment {
                id: 2 * j,
                left: strip(j),
                right: faces_of(ribbon, right),
                branch: Some(product(j)),
                cusp_into: strip(j),
            });
        }
        for (i, &j) in perm.iter().enumerate() {
            let (left, _) = ribbon.arc_sides(j);
            let face = faces_of(ribbon, left);
            segments.push(LocusSegment { id: 2 * i + 1, left: strip(j), right: face, branch: Some(product(i)), cusp_into: face });
        }
        segments.sort_by_key(|s| s.id);
        SectorComplex::new(sectors, segments)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for x in &self.sectors {
            let disk = if x.is_disk { "disk" } else { "nondisk" };
            let bdy = if x.meets_boundary { "boundary" } else { "interior" };
            writeln!(s, "sector {} {disk} {bdy}", x.id).unwrap();
        }
        for g in &self.segments {
            let branch = g.branch.map_or("-".to_string(), |b| b.to_string());
            writeln!(s, "segment {} {} {} {branch} {}", g.id, g.left, g.right, g.cusp_into).unwrap();
        }
        s
    }

    /// Parses `sector <id> <disk|nondisk> <interior|boundary>` and
    /// `segment <id> <left> <right> <branch|-> <cusp_into>` lines.
    pub fn parse_text(text: &str) -> Result<Self> {
        let mut sectors = Vec::new();
        let mut segments = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |message: String| Error::Parse { line: i + 1, message };
            let f: Vec<&str> = line.split_whitespace().collect();
            let num = |t: &str| t.parse::<usize>().map_err(|_| err(format!("bad id '{t}'")));
            match f[..] {
                ["sector", id, disk, bdy] => {
                    let is_disk = match disk {
                        "disk" => true,
                        "nondisk" => false,
                        _ => return Err(err(format!("expected disk|nondisk, got '{disk}'"))),
                    };
                    let meets_boundary = match bdy {
                        "boundary" => true,
                        "interior" => false,
                        _ => return Err(err(format!("expected interior|boundary, got '{bdy}'"))),
                    };
                    sectors.push(Sector { id: num(id)?, is_disk, meets_boundary });
                }
                ["segment", id, left, right, branch, cusp] => {
                    let branch = if branch == "-" { None } else { Some(num(branch)?) };
                    segments.push(LocusSegment {
                        id: num(id)?,
                        left: num(left)?,
                        right: num(right)?,
                        branch,
                        cusp_into: num(cusp)?,
                    });
                }
                _ => return Err(err(format!("unrecognised line '{line}'"))),
            }
        }
        SectorComplex::new(sectors, segments)
    }
}

fn faces_of(ribbon: &ArcSystemRibbon, vertex: usize) -> usize {
    ribbon.face_of_vertex()[vertex]
}

/// Which end of an arc a boundary point is.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum EndSign {
    Start,
    End,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct ArcEnd {
    pub arc: usize,
    pub sign: EndSign,
}

/// An oriented arc given as the co-core of a ribbon edge. With
/// `forward = true` it starts on the side of the band walked by the
/// edge's first half-edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CoCore {
    pub edge: usize,
    pub forward: bool,
}

/// A fiber surface presented as a fat graph (cyclic orders of half-edges
/// at each vertex, edges pairing half-edges) together with a system of
/// disjoint oriented arcs, each the co-core of one band.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ArcSystemRibbon {
    vertices: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
    arcs: Vec<CoCore>,
    #[serde(skip)]
    sigma: Vec<usize>,
    #[serde(skip)]
    vertex_of: Vec<usize>,
    #[serde(skip)]
    edge_of: Vec<usize>,
    #[serde(skip)]
    partner: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Face {
    pub id: usize,
    pub euler_characteristic: i64,
    pub boundary_circles: usize,
    pub genus: i64,
    pub is_disk: bool,
}

impl ArcSystemRibbon {
    pub fn new(vertices: Vec<Vec<usize>>, edges: Vec<(usize, usize)>, arcs: Vec<CoCore>) -> Result<Self> {
        let h = 2 * edges.len();
        let bad = |m: String| Error::InconsistentPairing(m);
        let mut vertex_of = vec![usize::MAX; h];
        let mut sigma = vec![usize::MAX; h];
        for (v, rot) in vertices.iter().enumerate() {
            if rot.is_empty() {
                return Err(bad(format!("vertex {v} has no half-edges")));
            }
            for (i, &x) in rot.iter().enumerate() {
                if x >= h {
                    return Err(bad(format!("half-edge {x} out of range (edges give {h})")));
                }
                if vertex_of[x] != usize::MAX {
                    return Err(bad(format!("half-edge {x} appears at two corners")));
                }
                vertex_of[x] = v;
                sigma[x] = rot[(i + 1) % rot.len()];
            }
        }
        if let Some(x) = vertex_of.iter().position(|&v| v == usize::MAX) {
            return Err(bad(format!("half-edge {x} is not at any vertex")));
        }
        let mut edge_of = vec![usize::MAX; h];
        let mut partner = vec![usize::MAX; h];
        for (e, &(a, b)) in edges.iter().enumerate() {
            if a == b || a >= h || b >= h {
                return Err(bad(format!("edge {e} has invalid ends ({a}, {b})")));
            }
            for (x, y) in [(a, b), (b, a)] {
                if edge_of[x] != usize::MAX {
                    return Err(bad(format!("half-edge {x} belongs to two edges")));
                }
                edge_of[x] = e;
                partner[x] = y;
            }
        }
        let mut used = BTreeSet::new();
        for (i, a) in arcs.iter().enumerate() {
            if a.edge >= edges.len() {
                return Err(bad(format!("arc {i} crosses unknown edge {}", a.edge)));
            }
            if !used.insert(a.edge) {
                return Err(bad(format!("two arcs cross edge {}", a.edge)));
            }
        }
        let ribbon = ArcSystemRibbon { vertices, edges, arcs, sigma, vertex_of, edge_of, partner };
        if ribbon.components(&[]).1 != 1 {
            return Err(bad("fat graph is disconnected".into()));
        }
        Ok(ribbon)
    }

    pub fn vertices(&self) -> &[Vec<usize>] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn arcs(&self) -> &[CoCore] {
        &self.arcs
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertices.len() as i64 - self.edges.len() as i64
    }

    /// Boundary cycles of the surface as sequences of half-edges.
    pub fn boundary_cycles(&self) -> Vec<Vec<usize>> {
        let h = self.sigma.len();
        let mut seen = vec![false; h];
        let mut cycles = Vec::new();
        for start in 0..h {
            if seen[start] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cyc.push(x);
                x = self.sigma[self.partner[x]];
            }
            cycles.push(cyc);
        }
        cycles
    }

    pub fn boundary_count(&self) -> usize {
        self.boundary_cycles().len()
    }

    pub fn genus(&self) -> i64 {
        (2 - self.euler_characteristic() - self.boundary_count() as i64) / 2
    }

    /// Arc ends met walking each boundary circle with the surface on the
    /// left.
    pub fn endpoints(&self) -> Vec<Vec<ArcEnd>> {
        let arc_at: BTreeMap<usize, usize> = self.arcs.iter().enumerate().map(|(i, a)| (a.edge, i)).collect();
        self.boundary_cycles()
            .into_iter()
            .map(|cyc| {
                cyc.into_iter()
                    .filter_map(|x| {
                        let arc = *arc_at.get(&self.edge_of[x])?;
                        let a = self.arcs[arc];
                        let first = self.edges[a.edge].0 == x;
                        let sign = if first == a.forward { EndSign::Start } else { EndSign::End };
                        Some(ArcEnd { arc, sign })
                    })
                    .collect()
            })
            .collect()
    }

    /// Whether starts and ends alternate around every boundary circle.
    pub fn endpoint_signs_alternate(&self) -> bool {
        self.endpoints().iter().all(|ends| {
            ends.len() % 2 == 0 && (0..ends.len()).all(|i| ends[i].sign != ends[(i + 1) % ends.len()].sign)
        })
    }

    /// Vertices on the left and right of arc `j`. Walking along a band side
    /// from `v(h)` to `v(h')` with the surface on the left, an arc entering
    /// from that side has `v(h')` on its right.
    pub fn arc_sides(&self, j: usize) -> (usize, usize) {
        let a = self.arcs[j];
        let (h, h2) = self.edges[a.edge];
        let (from, to) = if a.forward { (h, h2) } else { (h2, h) };
        (self.vertex_of[from], self.vertex_of[to])
    }

    /// Union-find labels of vertices after deleting `removed` edges, and
    /// the number of classes.
    fn components(&self, removed: &[usize]) -> (Vec<usize>, usize) {
        let n = self.vertices.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for (e, &(a, b)) in self.edges.iter().enumerate() {
            if removed.contains(&e) {
                continue;
            }
            let (ra, rb) = (find(&mut parent, self.vertex_of[a]), find(&mut parent, self.vertex_of[b]));
            if ra != rb {
                parent[ra.max(rb)] = ra.min(rb);
            }
        }
        let mut label = vec![usize::MAX; n];
        let mut next = 0;
        let mut out = vec![0; n];
        for v in 0..n {
            let r = find(&mut parent, v);
            if label[r] == usize::MAX {
                label[r] = next;
                next += 1;
            }
            out[v] = label[r];
        }
        (out, next)
    }

    fn face_of_vertex(&self) -> Vec<usize> {
        let removed: Vec<usize> = self.arcs.iter().map(|a| a.edge).collect();
        self.components(&removed).0
    }

    /// Components of the surface cut along the arcs. Cutting along the
    /// co-core of a band deletes that edge from the fat graph.
    pub fn trace_complement_faces(&self) -> Vec<Face> {
        let removed: BTreeSet<usize> = self.arcs.iter().map(|a| a.edge).collect();
        let removed_list: Vec<usize> = removed.iter().copied().collect();
        let (comp, count) = self.components(&removed_list);
        let mut vcount = vec![0i64; count];
        let mut ecount = vec![0i64; count];
        for v in 0..self.vertices.len() {
            vcount[comp[v]] += 1;
        }
        for (e, &(a, _)) in self.edges.iter().enumerate() {
            if !removed.contains(&e) {
                ecount[comp[self.vertex_of[a]]] += 1;
            }
        }
        // boundary walk of the reduced fat graph: skip deleted half-edges
        // in the rotation
        let keep = |x: usize| !removed.contains(&self.edge_of[x]);
        let next_kept = |x: usize| {
            let mut y = self.sigma[x];
            while !keep(y) && y != x {
                y = self.sigma[y];
            }
            y
        };
        let mut bcount = vec![0usize; count];
        let h = self.sigma.len();
        let mut seen = vec![false; h];
        for start in (0..h).filter(|&x| keep(x)) {
            if seen[start] {
                continue;
            }
            bcount[comp[self.vertex_of[start]]] += 1;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = next_kept(self.partner[x]);
            }
        }
        for v in 0..self.vertices.len() {
            // a vertex whose bands are all cut is a disk with one boundary
            if self.vertices[v].iter().all(|&x| !keep(x)) {
                bcount[comp[v]] += 1;
            }
        }
        (0..count)
            .map(|i| {
                let chi = vcount[i] - ecount[i];
                let b = bcount[i] as i64;
                Face {
                    id: i,
                    euler_characteristic: chi,
                    boundary_circles: bcount[i],
                    genus: (2 - chi - b) / 2,
                    is_disk: chi == 1,
                }
            })
            .collect()
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for rot in &self.vertices {
            let list: Vec<String> = rot.iter().map(|x| x.to_string()).collect();
            writeln!(s, "vertex {}", list.join(" ")).unwrap();
        }
        for (e, (a, b)) in self.edges.iter().enumerate() {
            writeln!(s, "edge {e} {a} {b}").unwrap();
        }
        for a in &self.arcs {
            writeln!(s, "arc {} {}", a.edge, if a.forward { '+' } else { '-' }).unwrap();
        }
        s
    }

    /// Parses `vertex <half-edges...>`, `edge <id> <h> <h'>` (ids in
    /// order from zero) and `arc <edge> <+|->` lines.
    pub fn parse_text(text: &str) -> Result<Self> {
        let mut vertices = Vec::new();
        let mut edges = Vec::new();
        let mut arcs = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |message: String| Error::Parse { line: i + 1, message };
            let f: Vec<&str> = line.split_whitespace().collect();
            let num = |t: &str| t.parse::<usize>().map_err(|_| err(format!("bad number '{t}'")));
            match f[..] {
                ["vertex", ref rest @ ..] => vertices.push(rest.iter().map(|t| num(t)).collect::<Result<Vec<_>>>()?),
                ["edge", id, a, b] => {
                    if num(id)? != edges.len() {
                        return Err(err(format!("edge ids must be consecutive from 0, got {id}")));
                    }
                    edges.push((num(a)?, num(b)?));
                }
                ["arc", e, sign] => {
                    let forward = match sign {
                        "+" => true,
                        "-" | "\u{2212}" => false,
                        _ => return Err(err(format!("arc sign must be + or -, got '{sign}'"))),
                    };
                    arcs.push(CoCore { edge: num(e)?, forward });
                }
                _ => return Err(err(format!("unrecognised line '{line}'"))),
            }
        }
        ArcSystemRibbon::new(vertices, edges, arcs)
    }
}
