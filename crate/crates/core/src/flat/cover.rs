//! The orientation double cover on which `√q` becomes an abelian differential.
//!
//! Each polygon appears on two sheets. Translated edges stay on their sheet,
//! flipped edges swap sheets. The lifted 1-form is `dz` on sheet 0 and `-dz`
//! on sheet 1, and the deck involution swaps the sheets.
//!
//! Cells: the face `(p, s)` has index `2p + s`; the edge lifted from pairing
//! `k` whose side `a` lies on sheet `s` has index `2k + s` and is oriented
//! like side `a`. The deck involution therefore maps edge `e` to `e ^ 1`.

use num_complex::Complex;

use super::gluing::{Corner, FlatSurface, Side};
use crate::scalar::Real;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoverStatus {
    Connected,
    /// Trivial holonomy: `q` is the square of an abelian differential and the
    /// cover is two disjoint copies of the surface.
    Orientable,
}

/// A polygon corner on one sheet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SheetCorner {
    pub corner: Corner,
    pub sheet: usize,
}

/// An edge end at a vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Dart {
    pub edge: usize,
    /// The edge's orientation points away from the vertex.
    pub outgoing: bool,
}

/// A vertex of the cover with its rotation system.
#[derive(Debug, Clone)]
pub struct CoverVertex {
    /// Corners in counter-clockwise order.
    pub corners: Vec<SheetCorner>,
    /// `darts[j]` separates `corners[j]` (clockwise side) from `corners[j + 1]`.
    pub darts: Vec<Dart>,
    /// Index of the cone point below.
    pub base_point: usize,
    /// Whether this vertex is a ramification point.
    pub branched: bool,
}

#[derive(Debug, Clone)]
pub struct DoubleCover<T> {
    surface: FlatSurface<T>,
    status: CoverStatus,
    vertices: Vec<CoverVertex>,
    vertex_of: Vec<Vec<[usize; 2]>>,
    edge_ends: Vec<(usize, usize)>,
    faces: Vec<Vec<(usize, i32)>>,
    edge_periods: Vec<Complex<T>>,
    components: usize,
}

impl<T: Real> DoubleCover<T> {
    pub fn surface(&self) -> &FlatSurface<T> {
        &self.surface
    }

    pub fn status(&self) -> CoverStatus {
        self.status
    }

    pub fn is_connected(&self) -> bool {
        self.status == CoverStatus::Connected
    }

    pub fn components(&self) -> usize {
        self.components
    }

    pub fn vertices(&self) -> &[CoverVertex] {
        &self.vertices
    }

    pub fn vertex_of(&self, c: SheetCorner) -> usize {
        self.vertex_of[c.corner.polygon][c.corner.edge][c.sheet]
    }

    pub fn edge_count(&self) -> usize {
        self.edge_ends.len()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    /// `(tail, head)` vertex of a cover edge.
    pub fn edge_ends(&self, edge: usize) -> (usize, usize) {
        self.edge_ends[edge]
    }

    /// Signed boundary of a face.
    pub fn face_boundary(&self, face: usize) -> &[(usize, i32)] {
        &self.faces[face]
    }

    /// `∫ ω` along a cover edge.
    pub fn edge_period(&self, edge: usize) -> Complex<T> {
        self.edge_periods[edge]
    }

    pub fn edge_periods(&self) -> &[Complex<T>] {
        &self.edge_periods
    }

    /// Image of an edge under the deck involution (orientation preserved).
    pub fn deck_edge(edge: usize) -> usize {
        edge ^ 1
    }

    pub fn deck_vertex(&self, v: usize) -> usize {
        let c = self.vertices[v].corners[0];
        self.vertex_of(SheetCorner { corner: c.corner, sheet: 1 - c.sheet })
    }

    pub fn branch_points(&self) -> Vec<usize> {
        (0..self.vertices.len()).filter(|&v| self.vertices[v].branched).collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertices.len() as i64 - self.edge_ends.len() as i64 + self.faces.len() as i64
    }

    /// Genus of each connected component.
    pub fn genus(&self) -> usize {
        let chi = self.euler_characteristic() / self.components as i64;
        ((2 - chi) / 2) as usize
    }

    /// `2 - 2g̃ = 2 (2 - 2g) - #branch points`, for a connected cover.
    pub fn riemann_hurwitz_holds(&self) -> bool {
        if !self.is_connected() {
            return self.branch_points().is_empty() && self.genus() == self.surface.genus();
        }
        let lhs = 2 - 2 * self.genus() as i64;
        let rhs = 2 * (2 - 2 * self.surface.genus() as i64) - self.branch_points().len() as i64;
        lhs == rhs
    }
}

/// Builds the cover. An orientable `q` yields a disconnected cover flagged
/// [`CoverStatus::Orientable`]; it is still a valid input downstream.
pub fn build_double_cover<T: Real>(s: &FlatSurface<T>) -> DoubleCover<T> {
    let g = s.gluing();
    let npoly = g.polygons.len();
    let npair = g.pairings.len();

    let next = |c: SheetCorner| -> (SheetCorner, Dart) {
        let n = g.polygons[c.corner.polygon].len();
        let incoming = Corner::new(c.corner.polygon, (c.corner.edge + n - 1) % n);
        let glue = s.edge_gluing(incoming);
        let sheet = if glue.flip { 1 - c.sheet } else { c.sheet };
        let dart = match glue.side {
            Side::A => Dart { edge: 2 * glue.pairing + c.sheet, outgoing: false },
            Side::B => Dart { edge: 2 * glue.pairing + sheet, outgoing: true },
        };
        (SheetCorner { corner: glue.partner, sheet }, dart)
    };

    let mut vertex_of: Vec<Vec<[usize; 2]>> = g.polygons.iter().map(|p| vec![[usize::MAX; 2]; p.len()]).collect();
    let mut vertices = Vec::new();
    for p in 0..npoly {
        for i in 0..g.polygons[p].len() {
            for sheet in 0..2 {
                if vertex_of[p][i][sheet] != usize::MAX {
                    continue;
                }
                let id = vertices.len();
                let start = SheetCorner { corner: Corner::new(p, i), sheet };
                let mut corners = Vec::new();
                let mut darts = Vec::new();
                let mut c = start;
                loop {
                    vertex_of[c.corner.polygon][c.corner.edge][c.sheet] = id;
                    corners.push(c);
                    let (n, d) = next(c);
                    darts.push(d);
                    c = n;
                    if c == start {
                        break;
                    }
                }
                let branched = corners.iter().any(|x| x.corner == start.corner && x.sheet != sheet);
                vertices.push(CoverVertex { corners, darts, base_point: s.cone_point_of(start.corner), branched });
            }
        }
    }

    let vertex = |corner: Corner, sheet: usize| vertex_of[corner.polygon][corner.edge][sheet];
    let mut edge_ends = Vec::with_capacity(2 * npair);
    let mut edge_periods = Vec::with_capacity(2 * npair);
    for pr in &g.pairings {
        let n = g.polygons[pr.a.polygon].len();
        let vec = g.edge_vector(pr.a);
        for sheet in 0..2 {
            let tail = vertex(pr.a, sheet);
            let head = vertex(Corner::new(pr.a.polygon, (pr.a.edge + 1) % n), sheet);
            edge_ends.push((tail, head));
            edge_periods.push(if sheet == 0 { vec } else { -vec });
        }
    }

    let mut faces = Vec::with_capacity(2 * npoly);
    for p in 0..npoly {
        for sheet in 0..2 {
            let boundary = (0..g.polygons[p].len())
                .map(|e| {
                    let glue = s.edge_gluing(Corner::new(p, e));
                    match glue.side {
                        Side::A => (2 * glue.pairing + sheet, 1),
                        Side::B => {
                            let sa = if glue.flip { 1 - sheet } else { sheet };
                            (2 * glue.pairing + sa, -1)
                        }
                    }
                })
                .collect();
            faces.push(boundary);
        }
    }

    // components via faces sharing edges
    let mut parent: Vec<usize> = (0..2 * npoly).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut owner = vec![usize::MAX; 2 * npair];
    for (f, boundary) in faces.iter().enumerate() {
        for &(e, _) in boundary {
            if owner[e] == usize::MAX {
                owner[e] = f;
            } else {
                let (a, b) = (find(&mut parent, owner[e]), find(&mut parent, f));
                parent[a] = b;
            }
        }
    }
    let mut roots: Vec<usize> = (0..2 * npoly).map(|f| find(&mut parent, f)).collect();
    roots.sort_unstable();
    roots.dedup();
    let components = roots.len();
    let status = if components == 1 { CoverStatus::Connected } else { CoverStatus::Orientable };

    DoubleCover { surface: s.clone(), status, vertices, vertex_of, edge_ends, faces, edge_periods, components }
}
