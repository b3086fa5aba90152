//! Rational convex polytopes: V-representation input, derived
//! H-representation, dilation, and exact lattice-point enumeration.
//!
//! Facets are derived for the shapes the toolkit actually needs — single
//! points, 1-dimensional intervals, 2-dimensional polygons (vertices sorted
//! by angle around the centroid), and n-simplices — and every other input is
//! rejected rather than approximated. Facet normals are stored as primitive
//! integer vectors with rational offsets, so membership tests are exact.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::linalg::{self, parse_rational, rational_to_string, Rational, RationalMatrix};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolytopeError {
    #[error("polytope document is not valid JSON: {0}")]
    Json(String),
    #[error("malformed rational coordinate `{0}`")]
    MalformedRational(String),
    #[error("dimension mismatch: expected {expected} coordinates, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("polytope needs at least one vertex")]
    NoVertices,
    #[error("dimension must be at least 1")]
    ZeroDimension,
    #[error("unsupported vertex configuration: {0}")]
    UnsupportedShape(String),
    #[error("dilation factor must be nonnegative")]
    NegativeDilation,
}

/// One inequality `normal · x <= offset` with a primitive integer normal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Facet {
    pub normal: Vec<BigInt>,
    pub offset: Rational,
}

impl Facet {
    fn satisfied_by(&self, point: &[Rational]) -> bool {
        let lhs = self
            .normal
            .iter()
            .zip(point)
            .fold(Rational::zero(), |acc, (n, x)| {
                acc + Rational::from_integer(n.clone()) * x
            });
        lhs <= self.offset
    }

    fn satisfied_by_int(&self, point: &[i64]) -> bool {
        let lhs = self
            .normal
            .iter()
            .zip(point)
            .fold(BigInt::zero(), |acc, (n, &x)| acc + n * BigInt::from(x));
        Rational::from_integer(lhs) <= self.offset
    }
}

/// Convex polytope given by rational vertices, with derived facets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polytope {
    dim: usize,
    vertices: Vec<Vec<Rational>>,
    facets: Vec<Facet>,
}

/// Finite set of integer points, deduplicated and sorted lexicographically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticePointSet {
    dim: usize,
    points: Vec<Vec<i64>>,
}

impl Polytope {
    /// Validate vertices, derive facets, and check every vertex against every
    /// facet.
    pub fn from_vertices(dim: usize, vertices: Vec<Vec<Rational>>) -> Result<Self, PolytopeError> {
        if dim == 0 {
            return Err(PolytopeError::ZeroDimension);
        }
        if vertices.is_empty() {
            return Err(PolytopeError::NoVertices);
        }
        for v in &vertices {
            if v.len() != dim {
                return Err(PolytopeError::DimensionMismatch {
                    expected: dim,
                    got: v.len(),
                });
            }
        }
        let mut distinct: Vec<Vec<Rational>> = Vec::new();
        for v in &vertices {
            if !distinct.contains(v) {
                distinct.push(v.clone());
            }
        }
        let facets = derive_facets(dim, &distinct)?;
        let p = Self {
            dim,
            vertices,
            facets,
        };
        for v in &p.vertices {
            if !p.contains(v) {
                return Err(PolytopeError::UnsupportedShape(
                    "vertices do not form a convex polytope of a supported shape".into(),
                ));
            }
        }
        Ok(p)
    }

    /// Parse the polytope file schema: `{"dim": n, "vertices": [[...], ...]}`
    /// with coordinates as integers or `"p/q"` strings.
    pub fn parse(document: &str) -> Result<Self, PolytopeError> {
        let value: serde_json::Value =
            serde_json::from_str(document).map_err(|e| PolytopeError::Json(e.to_string()))?;
        Self::from_json(&value)
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self, PolytopeError> {
        let dim = value
            .get("dim")
            .and_then(|d| d.as_u64())
            .ok_or_else(|| PolytopeError::Json("missing or invalid `dim`".into()))?
            as usize;
        let raw = value
            .get("vertices")
            .and_then(|v| v.as_array())
            .ok_or_else(|| PolytopeError::Json("missing `vertices` array".into()))?;
        let mut vertices = Vec::with_capacity(raw.len());
        for row in raw {
            let coords = row
                .as_array()
                .ok_or_else(|| PolytopeError::Json("vertex must be an array".into()))?;
            let mut vertex = Vec::with_capacity(coords.len());
            for c in coords {
                vertex.push(json_rational(c)?);
            }
            vertices.push(vertex);
        }
        Self::from_vertices(dim, vertices)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "dim": self.dim,
            "vertices": self
                .vertices
                .iter()
                .map(|v| v.iter().map(rational_to_string).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[Vec<Rational>] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    /// Scale by a nonnegative rational: vertices and facet offsets scale,
    /// facet normals are unchanged.
    pub fn dilate(&self, factor: &Rational) -> Result<Polytope, PolytopeError> {
        if factor.is_negative() {
            return Err(PolytopeError::NegativeDilation);
        }
        Ok(Polytope {
            dim: self.dim,
            vertices: self
                .vertices
                .iter()
                .map(|v| v.iter().map(|c| c * factor).collect())
                .collect(),
            facets: self
                .facets
                .iter()
                .map(|f| Facet {
                    normal: f.normal.clone(),
                    offset: &f.offset * factor,
                })
                .collect(),
        })
    }

    /// Integer-dilation convenience.
    pub fn dilate_int(&self, m: u64) -> Polytope {
        self.dilate(&Rational::from_integer(BigInt::from(m)))
            .expect("nonnegative dilation")
    }

    /// Exact membership test against all facets.
    pub fn contains(&self, point: &[Rational]) -> bool {
        point.len() == self.dim && self.facets.iter().all(|f| f.satisfied_by(point))
    }

    pub fn contains_int(&self, point: &[i64]) -> bool {
        point.len() == self.dim && self.facets.iter().all(|f| f.satisfied_by_int(point))
    }

    /// Enumerate all integer points: scan the integer bounding box of the
    /// vertices and keep the points satisfying every facet inequality.
    pub fn lattice_points(&self) -> LatticePointSet {
        let mut lo = Vec::with_capacity(self.dim);
        let mut hi = Vec::with_capacity(self.dim);
        for i in 0..self.dim {
            let min = self
                .vertices
                .iter()
                .map(|v| &v[i])
                .min()
                .expect("nonempty vertices");
            let max = self.vertices.iter().map(|v| &v[i]).max().expect("nonempty");
            lo.push(
                min.ceil()
                    .to_integer()
                    .to_i64()
                    .expect("bounding box fits in i64"),
            );
            hi.push(
                max.floor()
                    .to_integer()
                    .to_i64()
                    .expect("bounding box fits in i64"),
            );
        }
        let mut points = Vec::new();
        if lo.iter().zip(&hi).any(|(a, b)| a > b) {
            return LatticePointSet {
                dim: self.dim,
                points,
            };
        }
        let mut cursor = lo.clone();
        loop {
            if self.contains_int(&cursor) {
                points.push(cursor.clone());
            }
            // Odometer increment, last coordinate fastest: lexicographic output.
            let mut i = self.dim;
            loop {
                if i == 0 {
                    return LatticePointSet {
                        dim: self.dim,
                        points,
                    };
                }
                i -= 1;
                if cursor[i] < hi[i] {
                    cursor[i] += 1;
                    break;
                }
                cursor[i] = lo[i];
            }
        }
    }

    /// Lattice-point counts of the dilations `0P, 1P, ..., m_max P`.
    pub fn ehrhart_series(&self, m_max: u64) -> Vec<u64> {
        (0..=m_max)
            .map(|m| self.dilate_int(m).lattice_points().len() as u64)
            .collect()
    }
}

fn json_rational(v: &serde_json::Value) -> Result<Rational, PolytopeError> {
    match v {
        serde_json::Value::Number(n) => n
            .as_i64()
            .map(|i| Rational::from_integer(BigInt::from(i)))
            .ok_or_else(|| PolytopeError::MalformedRational(n.to_string())),
        serde_json::Value::String(s) => {
            parse_rational(s).map_err(|_| PolytopeError::MalformedRational(s.clone()))
        }
        other => Err(PolytopeError::MalformedRational(other.to_string())),
    }
}

/// Scale a rational direction to a primitive integer vector, preserving
/// orientation.
fn primitive_normal(dir: &[Rational]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for x in dir {
        lcm = lcm.lcm(x.denom());
    }
    let mut ints: Vec<BigInt> = dir.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let mut gcd = BigInt::zero();
    for v in &ints {
        gcd = gcd.gcd(v);
    }
    if !gcd.is_zero() && !gcd.is_one() {
        for v in &mut ints {
            *v = &*v / &gcd;
        }
    }
    ints
}

fn dot(normal: &[BigInt], point: &[Rational]) -> Rational {
    normal
        .iter()
        .zip(point)
        .fold(Rational::zero(), |acc, (n, x)| {
            acc + Rational::from_integer(n.clone()) * x
        })
}

fn derive_facets(dim: usize, distinct: &[Vec<Rational>]) -> Result<Vec<Facet>, PolytopeError> {
    if distinct.len() == 1 {
        // A single point is pinned by opposite axis-aligned inequalities.
        let p = &distinct[0];
        let mut facets = Vec::with_capacity(2 * dim);
        for i in 0..dim {
            let mut plus = vec![BigInt::zero(); dim];
            plus[i] = BigInt::one();
            facets.push(Facet {
                normal: plus,
                offset: p[i].clone(),
            });
            let mut minus = vec![BigInt::zero(); dim];
            minus[i] = -BigInt::one();
            facets.push(Facet {
                normal: minus,
                offset: -p[i].clone(),
            });
        }
        return Ok(facets);
    }
    if dim == 1 {
        let min = distinct.iter().map(|v| &v[0]).min().expect("nonempty");
        let max = distinct.iter().map(|v| &v[0]).max().expect("nonempty");
        return Ok(vec![
            Facet {
                normal: vec![BigInt::one()],
                offset: max.clone(),
            },
            Facet {
                normal: vec![-BigInt::one()],
                offset: -min.clone(),
            },
        ]);
    }
    if dim == 2 && distinct.len() >= 3 {
        return polygon_facets(distinct);
    }
    if distinct.len() == dim + 1 {
        return simplex_facets(dim, distinct);
    }
    Err(PolytopeError::UnsupportedShape(format!(
        "{} distinct vertices in dimension {}: facets are only derivable for points, intervals, \
         planar polygons, and simplices",
        distinct.len(),
        dim
    )))
}

/// Sort polygon vertices counterclockwise around the centroid by exact angle
/// comparison, then read one facet off each edge.
fn polygon_facets(distinct: &[Vec<Rational>]) -> Result<Vec<Facet>, PolytopeError> {
    let n = Rational::from_integer(BigInt::from(distinct.len() as i64));
    let cx = distinct
        .iter()
        .fold(Rational::zero(), |acc, v| acc + &v[0])
        / n.clone();
    let cy = distinct
        .iter()
        .fold(Rational::zero(), |acc, v| acc + &v[1])
        / n;

    let mut sorted: Vec<(Rational, Rational)> = distinct
        .iter()
        .map(|v| (&v[0] - &cx, &v[1] - &cy))
        .collect();
    let half = |p: &(Rational, Rational)| -> u8 {
        // 0 for angle in [0, pi) measured from the positive x-axis, 1 below.
        if p.1.is_positive() || (p.1.is_zero() && p.0.is_positive()) {
            0
        } else {
            1
        }
    };
    let cross = |a: &(Rational, Rational), b: &(Rational, Rational)| -> Rational {
        &a.0 * &b.1 - &a.1 * &b.0
    };
    sorted.sort_by(|a, b| {
        half(a).cmp(&half(b)).then_with(|| {
            let c = cross(a, b);
            if c.is_positive() {
                std::cmp::Ordering::Less
            } else if c.is_negative() {
                std::cmp::Ordering::Greater
            } else {
                // Same ray from the centroid: nearer point first.
                let na = &a.0 * &a.0 + &a.1 * &a.1;
                let nb = &b.0 * &b.0 + &b.1 * &b.1;
                na.cmp(&nb)
            }
        })
    });

    let cycle: Vec<(Rational, Rational)> = sorted
        .into_iter()
        .map(|(dx, dy)| (dx + &cx, dy + &cy))
        .collect();
    let signed_area2 = cycle
        .iter()
        .zip(cycle.iter().cycle().skip(1))
        .fold(Rational::zero(), |acc, (a, b)| {
            acc + (&a.0 * &b.1 - &b.0 * &a.1)
        });
    if signed_area2.is_zero() {
        return Err(PolytopeError::UnsupportedShape(
            "polygon vertices are collinear".into(),
        ));
    }

    let mut facets: Vec<Facet> = Vec::new();
    for (a, b) in cycle.iter().zip(cycle.iter().cycle().skip(1)) {
        let dx = &b.0 - &a.0;
        let dy = &b.1 - &a.1;
        if dx.is_zero() && dy.is_zero() {
            continue;
        }
        // Outward normal of a counterclockwise edge.
        let normal = primitive_normal(&[dy.clone(), -dx.clone()]);
        let offset = dot(&normal, &[a.0.clone(), a.1.clone()]);
        let f = Facet { normal, offset };
        if !facets.contains(&f) {
            facets.push(f);
        }
    }
    Ok(facets)
}

/// One facet per omitted vertex: the normal spans the kernel of the edge
/// directions, oriented away from the omitted vertex.
fn simplex_facets(dim: usize, distinct: &[Vec<Rational>]) -> Result<Vec<Facet>, PolytopeError> {
    let base = &distinct[0];
    let dirs: Vec<Vec<Rational>> = distinct[1..]
        .iter()
        .map(|v| v.iter().zip(base).map(|(a, b)| a - b).collect())
        .collect();
    let dir_matrix = RationalMatrix::from_rows(dim, dirs);
    if linalg::rank(&dir_matrix) != dim {
        return Err(PolytopeError::UnsupportedShape(
            "simplex vertices are affinely dependent".into(),
        ));
    }

    let mut facets = Vec::with_capacity(dim + 1);
    for omitted in 0..distinct.len() {
        let on_facet: Vec<&Vec<Rational>> = distinct
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != omitted)
            .map(|(_, v)| v)
            .collect();
        let anchor = on_facet[0];
        let rows: Vec<Vec<Rational>> = on_facet[1..]
            .iter()
            .map(|v| v.iter().zip(anchor).map(|(a, b)| a - b).collect())
            .collect();
        let kernel = linalg::kernel_basis(&RationalMatrix::from_rows(dim, rows));
        assert_eq!(kernel.rows(), 1, "facet normal is unique up to scale");
        let mut normal = primitive_normal(kernel.row(0));
        let mut offset = dot(&normal, anchor);
        let opposite = dot(&normal, &distinct[omitted]);
        if opposite > offset {
            for x in &mut normal {
                *x = -x.clone();
            }
            offset = -offset;
        }
        facets.push(Facet { normal, offset });
    }
    Ok(facets)
}

impl LatticePointSet {
    pub fn new(dim: usize, mut points: Vec<Vec<i64>>) -> Self {
        points.sort();
        points.dedup();
        Self { dim, points }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Vec<i64>] {
        &self.points
    }

    pub fn contains(&self, p: &[i64]) -> bool {
        self.points.binary_search_by(|q| q.as_slice().cmp(p)).is_ok()
    }

    /// Componentwise minimum over all points. `None` when empty.
    pub fn min_coords(&self) -> Option<Vec<i64>> {
        if self.points.is_empty() {
            return None;
        }
        let mut mins = vec![i64::MAX; self.dim];
        for p in &self.points {
            for (lo, &c) in mins.iter_mut().zip(p) {
                *lo = (*lo).min(c);
            }
        }
        Some(mins)
    }

    /// Points translated into the nonnegative orthant (subtract the
    /// componentwise minimum), plus the applied shift.
    pub fn shifted_to_origin(&self) -> (Vec<Vec<i64>>, Vec<i64>) {
        let mins = self.min_coords().unwrap_or_else(|| vec![0; self.dim]);
        let shifted = self
            .points
            .iter()
            .map(|p| p.iter().zip(&mins).map(|(c, m)| c - m).collect())
            .collect();
        (shifted, mins)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "dim": self.dim,
            "count": self.points.len(),
            "points": self.points,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{rat, rat_int};

    pub(crate) fn triangle() -> Polytope {
        Polytope::parse(r#"{"dim": 2, "vertices": [[0,0],[2,1],[1,2]]}"#).unwrap()
    }

    fn gk_triangle() -> Polytope {
        Polytope::parse(r#"{"dim": 2, "vertices": [["0","0"],["2/15","16/15"],["-6/7","4/7"]]}"#)
            .unwrap()
    }

    #[test]
    fn parse_triangle_has_three_facets() {
        let t = triangle();
        assert_eq!(t.dim(), 2);
        assert_eq!(t.facets().len(), 3);
    }

    #[test]
    fn parse_point_polytope() {
        let p = Polytope::parse(r#"{"dim": 1, "vertices": [[0]]}"#).unwrap();
        assert_eq!(p.dim(), 1);
        assert_eq!(p.lattice_points().points(), &[vec![0]]);
    }

    #[test]
    fn parse_rational_triangle() {
        let p = gk_triangle();
        assert_eq!(p.vertices()[1], vec![rat(2, 15), rat(16, 15)]);
        let z = p.lattice_points();
        assert_eq!(z.points(), &[vec![0, 0], vec![0, 1]]);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            Polytope::parse(r#"{"dim": 2, "vertices": []}"#),
            Err(PolytopeError::NoVertices)
        ));
        assert!(matches!(
            Polytope::parse(r#"{"dim": 2, "vertices": [[1]]}"#),
            Err(PolytopeError::DimensionMismatch { .. })
        ));
        assert!(matches!(
            Polytope::parse(r#"{"dim": 1, "vertices": [["1/0"]]}"#),
            Err(PolytopeError::MalformedRational(_))
        ));
        assert!(matches!(
            Polytope::parse(r#"{"dim": 1, "vertices": [[0.5]]}"#),
            Err(PolytopeError::MalformedRational(_))
        ));
        // Five vertices in dimension 3: neither polygon nor simplex.
        assert!(matches!(
            Polytope::parse(
                r#"{"dim": 3, "vertices": [[0,0,0],[1,0,0],[0,1,0],[0,0,1],[1,1,1]]}"#
            ),
            Err(PolytopeError::UnsupportedShape(_))
        ));
        // Two vertices in the plane: unsupported segment embedding.
        assert!(matches!(
            Polytope::parse(r#"{"dim": 2, "vertices": [[0,0],[1,1]]}"#),
            Err(PolytopeError::UnsupportedShape(_))
        ));
        // Collinear "polygon".
        assert!(matches!(
            Polytope::parse(r#"{"dim": 2, "vertices": [[0,0],[1,1],[2,2]]}"#),
            Err(PolytopeError::UnsupportedShape(_))
        ));
    }

    #[test]
    fn dilation_examples() {
        let seg = Polytope::parse(r#"{"dim": 1, "vertices": [[0],[1]]}"#).unwrap();
        let seg5 = seg.dilate_int(5);
        assert_eq!(
            seg5.lattice_points().points(),
            &[vec![0], vec![1], vec![2], vec![3], vec![4], vec![5]]
        );
        let t = triangle();
        assert_eq!(t.dilate_int(1), t);
        assert!(t.dilate(&rat(-1, 1)).is_err());

        // 105 times the rational triangle is twice its minimal integral model.
        let gk = gk_triangle().dilate_int(105);
        assert_eq!(
            gk.vertices(),
            &[
                vec![rat_int(0), rat_int(0)],
                vec![rat_int(14), rat_int(112)],
                vec![rat_int(-90), rat_int(60)],
            ]
        );
    }

    #[test]
    fn triangle_lattice_points() {
        let t = triangle();
        let z = t.lattice_points();
        assert_eq!(
            z.points(),
            &[vec![0, 0], vec![1, 1], vec![1, 2], vec![2, 1]]
        );
        assert_eq!(t.dilate_int(2).lattice_points().len(), 10);
    }

    #[test]
    fn ehrhart_series_examples() {
        let t = triangle();
        assert_eq!(t.ehrhart_series(2), vec![1, 4, 10]);
        // Pick's theorem closed form for this triangle: (3/2)m^2 + (3/2)m + 1.
        assert_eq!(
            t.ehrhart_series(4),
            (0..=4u64).map(|m| (3 * m * m + 3 * m + 2) / 2).collect::<Vec<_>>()
        );

        let point = Polytope::parse(r#"{"dim": 1, "vertices": [[0]]}"#).unwrap();
        assert_eq!(point.ehrhart_series(3), vec![1, 1, 1, 1]);

        let seg = Polytope::parse(r#"{"dim": 1, "vertices": [[0],[1]]}"#).unwrap();
        assert_eq!(seg.ehrhart_series(4), vec![1, 2, 3, 4, 5]);

        let square = Polytope::parse(r#"{"dim": 2, "vertices": [[0,0],[1,0],[1,1],[0,1]]}"#)
            .unwrap();
        assert_eq!(
            square.ehrhart_series(3),
            (0..=3u64).map(|m| (m + 1) * (m + 1)).collect::<Vec<_>>()
        );
    }

    #[test]
    fn tetrahedron_counts() {
        let tet = Polytope::parse(
            r#"{"dim": 3, "vertices": [[0,0,0],[1,0,0],[0,1,0],[0,0,1]]}"#,
        )
        .unwrap();
        assert_eq!(tet.facets().len(), 4);
        // Binomial C(m+3, 3).
        assert_eq!(tet.ehrhart_series(3), vec![1, 4, 10, 20]);
    }

    #[test]
    fn empty_dilations_of_rational_point() {
        let half = Polytope::parse(r#"{"dim": 1, "vertices": [["1/2"]]}"#).unwrap();
        assert_eq!(half.ehrhart_series(4), vec![1, 0, 1, 0, 1]);
        assert!(half.dilate_int(1).lattice_points().is_empty());
    }

    #[test]
    fn counts_grow_monotonically_for_origin_polytopes() {
        for (doc, mmax) in [
            (r#"{"dim": 2, "vertices": [[0,0],[2,1],[1,2]]}"#, 6u64),
            (r#"{"dim": 2, "vertices": [[0,0],[1,0],[1,1],[0,1]]}"#, 6),
            (r#"{"dim": 1, "vertices": [[0],[1]]}"#, 10),
        ] {
            let p = Polytope::parse(doc).unwrap();
            let counts = p.ehrhart_series(mmax);
            for w in counts.windows(2) {
                assert!(w[0] <= w[1], "counts must be monotone: {counts:?}");
            }
        }
    }

    #[test]
    fn integral_dilated_vertices_are_lattice_points() {
        let t = triangle();
        for m in 0..5u64 {
            let d = t.dilate_int(m);
            let z = d.lattice_points();
            for v in d.vertices() {
                if v.iter().all(|c| c.denom().is_one()) {
                    let p: Vec<i64> = v.iter().map(|c| c.numer().to_i64().unwrap()).collect();
                    assert!(z.contains(&p));
                }
            }
        }
    }

    #[test]
    fn vertex_order_does_not_change_the_polygon() {
        let a = Polytope::parse(r#"{"dim": 2, "vertices": [[0,0],[1,0],[1,1],[0,1]]}"#).unwrap();
        let b = Polytope::parse(r#"{"dim": 2, "vertices": [[1,1],[0,0],[1,0],[0,1]]}"#).unwrap();
        assert_eq!(a.lattice_points(), b.lattice_points());
        for m in 0..4 {
            assert_eq!(
                a.dilate_int(m).lattice_points(),
                b.dilate_int(m).lattice_points()
            );
        }
    }

    #[test]
    fn point_set_shift_helpers() {
        let z = LatticePointSet::new(2, vec![vec![-1, 2], vec![0, 0], vec![3, -2]]);
        assert_eq!(z.min_coords(), Some(vec![-1, -2]));
        let (shifted, mins) = z.shifted_to_origin();
        assert_eq!(mins, vec![-1, -2]);
        assert_eq!(shifted, vec![vec![0, 4], vec![1, 2], vec![4, 0]]);
    }
}
