//! Polygon gluing data and the flat surface it presents.

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Absolute tolerance for matching edge lengths and directions.
pub const VERTEX_TOLERANCE: f64 = 1e-9;

/// Tolerance (radians) for a cone angle to count as a multiple of pi.
const ANGLE_TOLERANCE: f64 = 1e-6;

/// An edge `edge` of polygon `polygon`, running from vertex `edge` to vertex
/// `edge + 1`. Serialized as `[polygon, edge]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "[usize; 2]", into = "[usize; 2]")]
pub struct EdgeRef {
    pub polygon: usize,
    pub edge: usize,
}

impl EdgeRef {
    pub const fn new(polygon: usize, edge: usize) -> Self {
        Self { polygon, edge }
    }
}

impl From<[usize; 2]> for EdgeRef {
    fn from([polygon, edge]: [usize; 2]) -> Self {
        Self { polygon, edge }
    }
}

impl From<EdgeRef> for [usize; 2] {
    fn from(e: EdgeRef) -> Self {
        [e.polygon, e.edge]
    }
}

/// Identification of two polygon edges.
///
/// With `flip = false` the gluing isometry is `z ↦ z + c`, with `flip = true`
/// it is `z ↦ -z + c`. Either way the start of `a` is glued to the end of `b`,
/// so for counter-clockwise polygons translated edges have opposite boundary
/// vectors and flipped edges have equal ones.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Pairing {
    pub a: EdgeRef,
    pub b: EdgeRef,
    pub flip: bool,
}

impl Pairing {
    pub const fn new(a: EdgeRef, b: EdgeRef, flip: bool) -> Self {
        Self { a, b, flip }
    }
}

/// Counter-clockwise Euclidean polygons with edge identifications.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(from = "RawGluing<T>", into = "RawGluing<T>", bound = "T: Real + Serialize + for<'a> Deserialize<'a>")]
pub struct GluingData<T> {
    pub polygons: Vec<Vec<Complex<T>>>,
    pub pairings: Vec<Pairing>,
}

#[derive(Clone, Serialize, Deserialize)]
struct RawGluing<T> {
    polygons: Vec<Vec<[T; 2]>>,
    pairings: Vec<Pairing>,
}

impl<T: Real> From<RawGluing<T>> for GluingData<T> {
    fn from(raw: RawGluing<T>) -> Self {
        Self {
            polygons: raw
                .polygons
                .into_iter()
                .map(|p| p.into_iter().map(|[re, im]| Complex::new(re, im)).collect())
                .collect(),
            pairings: raw.pairings,
        }
    }
}

impl<T: Real> From<GluingData<T>> for RawGluing<T> {
    fn from(g: GluingData<T>) -> Self {
        Self {
            polygons: g.polygons.into_iter().map(|p| p.into_iter().map(|z| [z.re, z.im]).collect()).collect(),
            pairings: g.pairings,
        }
    }
}

impl<T: Real + Serialize + for<'a> Deserialize<'a>> GluingData<T> {
    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }
}

impl<T: Real> GluingData<T> {
    pub fn vertex(&self, polygon: usize, index: usize) -> Complex<T> {
        let p = &self.polygons[polygon];
        p[index % p.len()]
    }

    /// Boundary vector of an edge, `v[e + 1] - v[e]`.
    pub fn edge_vector(&self, e: EdgeRef) -> Complex<T> {
        self.vertex(e.polygon, e.edge + 1) - self.vertex(e.polygon, e.edge)
    }

    /// Applies `f` to every vertex, keeping the combinatorics.
    pub fn map_vertices(&self, f: impl Fn(Complex<T>) -> Complex<T>) -> Self {
        Self {
            polygons: self.polygons.iter().map(|p| p.iter().map(|&z| f(z)).collect()).collect(),
            pairings: self.pairings.clone(),
        }
    }

    pub fn edge_count(&self) -> usize {
        self.polygons.iter().map(Vec::len).sum()
    }
}

/// Which side of a pairing an edge is.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    A,
    B,
}

/// Where an edge is glued.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgeGluing {
    pub pairing: usize,
    pub side: Side,
    pub partner: EdgeRef,
    pub flip: bool,
}

/// A polygon corner, `vertex` of `polygon`.
pub type Corner = EdgeRef;

/// A vertex orbit of the glued complex.
#[derive(Debug, Clone, PartialEq)]
pub struct ConePoint<T> {
    /// Corners in counter-clockwise order around the point.
    pub corners: Vec<Corner>,
    /// Total angle, measured.
    pub angle: T,
    /// The angle as a multiple of pi.
    pub multiple: u32,
}

/// A half-translation surface presented by glued polygons.
#[derive(Debug, Clone)]
pub struct FlatSurface<T> {
    gluing: GluingData<T>,
    edge_gluing: Vec<Vec<EdgeGluing>>,
    cone_points: Vec<ConePoint<T>>,
    corner_point: Vec<Vec<usize>>,
    euler_characteristic: i64,
    genus: usize,
    punctures: usize,
    area: T,
}

impl<T: Real> FlatSurface<T> {
    pub fn gluing(&self) -> &GluingData<T> {
        &self.gluing
    }

    pub fn cone_points(&self) -> &[ConePoint<T>] {
        &self.cone_points
    }

    /// Index of the cone point at a polygon corner.
    pub fn cone_point_of(&self, corner: Corner) -> usize {
        self.corner_point[corner.polygon][corner.edge]
    }

    pub fn edge_gluing(&self, e: EdgeRef) -> EdgeGluing {
        self.edge_gluing[e.polygon][e.edge]
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.euler_characteristic
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    /// Number of cone points of angle pi (simple poles of q).
    pub fn punctures(&self) -> usize {
        self.punctures
    }

    pub fn area(&self) -> T {
        self.area
    }

    /// Whether some pairing uses `z ↦ -z + c`.
    pub fn has_flips(&self) -> bool {
        self.gluing.pairings.iter().any(|p| p.flip)
    }

    /// The corner following `corner` counter-clockwise around its vertex.
    pub fn next_corner(&self, corner: Corner) -> Corner {
        next_corner(&self.gluing, &self.edge_gluing, corner)
    }

    /// `Σ (2π - angle) - 2π χ`, which vanishes on a correctly glued surface.
    pub fn gauss_bonnet_defect(&self) -> T {
        let two_pi = T::lit(2.0) * T::PI();
        let total = self.cone_points.iter().fold(T::zero(), |acc, c| acc + (two_pi - c.angle));
        total - two_pi * T::from_i64(self.euler_characteristic).unwrap()
    }

    /// The integer form of Gauss–Bonnet: `Σ (2 - k) = 2 χ`.
    pub fn gauss_bonnet_holds(&self) -> bool {
        let total: i64 = self.cone_points.iter().map(|c| 2 - c.multiple as i64).sum();
        total == 2 * self.euler_characteristic
    }
}

/// Genericity verdict: every cone angle lies in `{π, 2π, 3π}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Genericity {
    pub generic: bool,
    /// Indices of offending cone points.
    pub witnesses: Vec<usize>,
}

pub fn check_generic<T: Real>(s: &FlatSurface<T>) -> Genericity {
    let witnesses: Vec<usize> =
        s.cone_points.iter().enumerate().filter(|(_, c)| !(1..=3).contains(&c.multiple)).map(|(i, _)| i).collect();
    Genericity { generic: witnesses.is_empty(), witnesses }
}

fn next_corner<T: Real>(g: &GluingData<T>, glue: &[Vec<EdgeGluing>], c: Corner) -> Corner {
    let n = g.polygons[c.polygon].len();
    let incoming = (c.edge + n - 1) % n;
    glue[c.polygon][incoming].partner
}

/// Interior angle at vertex `i`, in `(0, 2π)`.
fn interior_angle<T: Real>(poly: &[Complex<T>], i: usize) -> T {
    let n = poly.len();
    let out = poly[(i + 1) % n] - poly[i];
    let back = poly[(i + n - 1) % n] - poly[i];
    let mut a = (back * out.conj()).arg();
    if a <= T::zero() {
        a += T::lit(2.0) * T::PI();
    }
    a
}

fn signed_area<T: Real>(poly: &[Complex<T>]) -> T {
    let n = poly.len();
    let twice = (0..n).fold(T::zero(), |acc, i| {
        let (p, q) = (poly[i], poly[(i + 1) % n]);
        acc + (p.re * q.im - q.re * p.im)
    });
    twice / T::lit(2.0)
}

fn cross<T: Real>(a: Complex<T>, b: Complex<T>) -> T {
    a.re * b.im - a.im * b.re
}

fn segments_touch<T: Real>(p1: Complex<T>, p2: Complex<T>, q1: Complex<T>, q2: Complex<T>, eps: T) -> bool {
    let d1 = cross(p2 - p1, q1 - p1);
    let d2 = cross(p2 - p1, q2 - p1);
    let d3 = cross(q2 - q1, p1 - q1);
    let d4 = cross(q2 - q1, p2 - q1);
    let strictly_opposite = |x: T, y: T| (x > eps && y < -eps) || (x < -eps && y > eps);
    if strictly_opposite(d1, d2) && strictly_opposite(d3, d4) {
        return true;
    }
    let on_segment = |a: Complex<T>, b: Complex<T>, p: Complex<T>, d: T| {
        d.abs() <= eps
            && p.re >= a.re.min(b.re) - eps
            && p.re <= a.re.max(b.re) + eps
            && p.im >= a.im.min(b.im) - eps
            && p.im <= a.im.max(b.im) + eps
    };
    on_segment(p1, p2, q1, d1) || on_segment(p1, p2, q2, d2) || on_segment(q1, q2, p1, d3) || on_segment(q1, q2, p2, d4)
}

fn validate_polygon<T: Real>(index: usize, poly: &[Complex<T>]) -> Result<()> {
    let n = poly.len();
    if n < 3 {
        return Err(Error::DegeneratePolygon(index));
    }
    if poly.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
        return Err(Error::NonFinite("polygon vertex"));
    }
    let scale = poly.iter().fold(T::one(), |m, z| m.max(z.norm()));
    let eps = T::lit(VERTEX_TOLERANCE) * scale;
    for i in 0..n {
        if (poly[(i + 1) % n] - poly[i]).norm() <= eps {
            return Err(Error::NonSimplePolygon(index));
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            let adjacent = j == i + 1 || (i == 0 && j == n - 1);
            let (p1, p2) = (poly[i], poly[(i + 1) % n]);
            let (q1, q2) = (poly[j], poly[(j + 1) % n]);
            if adjacent {
                // consecutive edges may be collinear but must not fold back
                let (shared, a, b) = if j == i + 1 { (p2, p1, q2) } else { (p1, p2, q1) };
                let (u, v) = (a - shared, b - shared);
                if cross(u, v).abs() <= eps * (u.norm() + v.norm()) && (u.re * v.re + u.im * v.im) > T::zero() {
                    return Err(Error::NonSimplePolygon(index));
                }
            } else if segments_touch(p1, p2, q1, q2, eps) {
                return Err(Error::NonSimplePolygon(index));
            }
        }
    }
    if signed_area(poly) <= T::zero() {
        return Err(Error::ClockwisePolygon(index));
    }
    Ok(())
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Validates the gluing and computes cone angles, genus and area.
pub fn build<T: Real>(g: &GluingData<T>) -> Result<FlatSurface<T>> {
    if g.polygons.is_empty() {
        return Err(Error::InvalidArgument("no polygons".into()));
    }
    for (i, p) in g.polygons.iter().enumerate() {
        validate_polygon(i, p)?;
    }

    let mut slots: Vec<Vec<Option<EdgeGluing>>> = g.polygons.iter().map(|p| vec![None; p.len()]).collect();
    let tol = T::lit(VERTEX_TOLERANCE);
    for (k, pr) in g.pairings.iter().enumerate() {
        let bad = |reason: String| Error::BadPairing { index: k, reason };
        for e in [pr.a, pr.b] {
            if e.polygon >= g.polygons.len() || e.edge >= g.polygons[e.polygon].len() {
                return Err(bad(format!("edge [{}, {}] does not exist", e.polygon, e.edge)));
            }
        }
        if pr.a == pr.b {
            return Err(bad("an edge cannot be glued to itself; split it at its midpoint".into()));
        }
        let (da, db) = (g.edge_vector(pr.a), g.edge_vector(pr.b));
        if (da.norm() - db.norm()).abs() > tol {
            return Err(bad(format!("edge lengths differ ({} vs {})", da.norm(), db.norm())));
        }
        let expected = if pr.flip { da } else { -da };
        if (db - expected).norm() > tol {
            let kind = if pr.flip { "equal" } else { "opposite" };
            return Err(bad(format!("edge vectors must be {kind} for flip = {}", pr.flip)));
        }
        for (side, this, other) in [(Side::A, pr.a, pr.b), (Side::B, pr.b, pr.a)] {
            let slot = &mut slots[this.polygon][this.edge];
            if slot.is_some() {
                return Err(bad(format!("edge [{}, {}] appears in more than one pairing", this.polygon, this.edge)));
            }
            *slot = Some(EdgeGluing { pairing: k, side, partner: other, flip: pr.flip });
        }
    }
    let mut edge_gluing = Vec::with_capacity(slots.len());
    for (p, row) in slots.into_iter().enumerate() {
        let mut out = Vec::with_capacity(row.len());
        for (e, s) in row.into_iter().enumerate() {
            out.push(s.ok_or(Error::UnpairedEdge { polygon: p, edge: e })?);
        }
        edge_gluing.push(out);
    }

    let mut parent: Vec<usize> = (0..g.polygons.len()).collect();
    for pr in &g.pairings {
        let (ra, rb) = (find(&mut parent, pr.a.polygon), find(&mut parent, pr.b.polygon));
        parent[ra] = rb;
    }
    let root = find(&mut parent, 0);
    if (0..g.polygons.len()).any(|p| find(&mut parent, p) != root) {
        return Err(Error::Disconnected);
    }

    let mut corner_point: Vec<Vec<usize>> = g.polygons.iter().map(|p| vec![usize::MAX; p.len()]).collect();
    let mut cone_points = Vec::new();
    for p in 0..g.polygons.len() {
        for i in 0..g.polygons[p].len() {
            if corner_point[p][i] != usize::MAX {
                continue;
            }
            let id = cone_points.len();
            let mut corners = Vec::new();
            let mut angle = T::zero();
            let mut c = Corner::new(p, i);
            loop {
                corner_point[c.polygon][c.edge] = id;
                corners.push(c);
                angle += interior_angle(&g.polygons[c.polygon], c.edge);
                c = next_corner(g, &edge_gluing, c);
                if c == Corner::new(p, i) {
                    break;
                }
            }
            let ratio = angle / T::PI();
            let multiple = ratio.round();
            if multiple < T::one() || (angle - multiple * T::PI()).abs() > T::lit(ANGLE_TOLERANCE) {
                return Err(Error::BadConeAngle { orbit: id, angle: angle.as_f64() });
            }
            cone_points.push(ConePoint { corners, angle, multiple: multiple.to_u32().unwrap() });
        }
    }

    let chi = cone_points.len() as i64 - g.pairings.len() as i64 + g.polygons.len() as i64;
    debug_assert!(chi <= 2 && chi % 2 == 0);
    let genus = ((2 - chi) / 2) as usize;
    let punctures = cone_points.iter().filter(|c| c.multiple == 1).count();
    let area = g.polygons.iter().fold(T::zero(), |acc, p| acc + signed_area(p));

    Ok(FlatSurface {
        gluing: g.clone(),
        edge_gluing,
        cone_points,
        corner_point,
        euler_characteristic: chi,
        genus,
        punctures,
        area,
    })
}
