//! SVG figures of planar regions and planar sections of spatial regions.

use std::fmt::Write as _;

use num_traits::{One, Signed, Zero};
use roq_core::kernel::{feasible_point, int, nullspace, Hyperplane, LinearConstraint, Rational, Vector};
use roq_core::region::Region;

use crate::Failure;

/// Decimal places in path coordinates.
pub const PRECISION: usize = 6;
const WIDTH_PX: u32 = 480;

pub type Point2 = [Rational; 2];

/// Cells of a region cut by a plane, in plane coordinates `(u, v)`.
#[derive(Clone, Debug)]
pub struct Section {
    /// `origin + u·basis[0] + v·basis[1]` parametrizes the plane.
    pub origin: Vector,
    pub basis: [Vector; 2],
    /// Strict constraints of each nonempty cell section.
    pub cells: Vec<Vec<LinearConstraint>>,
    /// `[umin, vmin, umax, vmax]`.
    pub canvas: [Rational; 4],
    /// Closure of each cell clipped to the canvas, counterclockwise.
    pub polygons: Vec<Vec<Point2>>,
}

impl Section {
    pub fn lift(&self, u: &Rational, v: &Rational) -> Vector {
        self.origin.add(&self.basis[0].scale(u)).add(&self.basis[1].scale(v))
    }

    /// Whether `(u, v)` lies inside some cell section.
    pub fn contains(&self, u: &Rational, v: &Rational) -> bool {
        let p = Vector::new(vec![u.clone(), v.clone()]);
        self.cells.iter().any(|c| c.iter().all(|k| k.is_satisfied(&p)))
    }
}

pub struct Rendered {
    pub svg: String,
    pub warnings: Vec<String>,
}

fn restrict(c: &LinearConstraint, origin: &Vector, basis: &[Vector; 2]) -> Option<Option<LinearConstraint>> {
    let normal = Vector::new(vec![c.normal.dot(&basis[0]), c.normal.dot(&basis[1])]);
    let offset = &c.offset - c.normal.dot(origin);
    if normal.is_zero() {
        // Constant on the plane: either always or never satisfied.
        let holds = if c.strict { offset.is_negative() } else { !offset.is_positive() };
        return if holds { Some(None) } else { None };
    }
    Some(Some(LinearConstraint { normal, offset, strict: c.strict }))
}

/// Plane coordinates for `region`; `plane` is required in dimension three and
/// forbidden in dimension two.
pub fn section(region: &Region, plane: Option<&Hyperplane>) -> Result<Section, Failure> {
    let (origin, basis) = match (region.dim(), plane) {
        (2, None) => (Vector::zeros(2), [Vector::unit(2, 0), Vector::unit(2, 1)]),
        (3, Some(p)) => {
            if p.dim() != 3 {
                return Err(roq_core::Error::DimensionMismatch { expected: 3, found: p.dim() }.into());
            }
            let n = p.normal();
            let origin = n.scale(&(p.offset() / n.dot(n)));
            let b = nullspace(&[n.coords().to_vec()], 3);
            let [b0, b1]: [Vector; 2] = b.try_into().map_err(|_| Failure::precondition("degenerate section plane"))?;
            (origin, [b0, b1])
        }
        (2, Some(_)) => return Err(Failure::precondition("planar regions are drawn without a section plane")),
        (3, None) => return Err(Failure::precondition("spatial regions need a section plane")),
        (d, _) => return Err(Failure::precondition(format!("cannot draw regions of dimension {d}"))),
    };
    let mut cells = Vec::new();
    'cells: for cell in region.cells() {
        let mut cs = Vec::new();
        for h in cell.reduced().constraints() {
            match restrict(&h.constraint(), &origin, &basis) {
                None => continue 'cells,
                Some(None) => {}
                Some(Some(c)) => cs.push(c),
            }
        }
        if feasible_point(2, &cs).is_some() {
            cells.push(cs);
        }
    }
    let canvas = canvas(&cells);
    let polygons = cells.iter().map(|c| clip(c, &canvas)).filter(|p| p.len() >= 3).collect();
    Ok(Section { origin, basis, cells, canvas, polygons })
}

fn closure(c: &LinearConstraint) -> LinearConstraint {
    LinearConstraint { normal: c.normal.clone(), offset: c.offset.clone(), strict: false }
}

fn meet(a: &LinearConstraint, b: &LinearConstraint) -> Option<Point2> {
    let (a0, a1) = (&a.normal[0], &a.normal[1]);
    let (b0, b1) = (&b.normal[0], &b.normal[1]);
    let det = a0 * b1 - a1 * b0;
    if det.is_zero() {
        return None;
    }
    let u = (&a.offset * b1 - a1 * &b.offset) / &det;
    let v = (a0 * &b.offset - &a.offset * b0) / &det;
    Some([u, v])
}

/// Vertices of the closed polygon `{x : c·x ≥ offset}`, counterclockwise.
fn vertices(cs: &[LinearConstraint]) -> Vec<Point2> {
    let closed: Vec<LinearConstraint> = cs.iter().map(closure).collect();
    let mut pts: Vec<Point2> = Vec::new();
    for i in 0..closed.len() {
        for j in i + 1..closed.len() {
            if let Some(p) = meet(&closed[i], &closed[j]) {
                let v = Vector::new(p.to_vec());
                if closed.iter().all(|c| c.is_satisfied(&v)) && !pts.contains(&p) {
                    pts.push(p);
                }
            }
        }
    }
    sort_ccw(&mut pts);
    pts
}

fn sort_ccw(pts: &mut [Point2]) {
    if pts.is_empty() {
        return;
    }
    let n = int(pts.len() as i64);
    let cu = pts.iter().fold(Rational::zero(), |s, p| s + &p[0]) / &n;
    let cv = pts.iter().fold(Rational::zero(), |s, p| s + &p[1]) / &n;
    let half = |p: &Point2| {
        let (du, dv) = (&p[0] - &cu, &p[1] - &cv);
        !(dv.is_positive() || (dv.is_zero() && du.is_positive()))
    };
    pts.sort_by(|a, b| {
        half(a).cmp(&half(b)).then_with(|| {
            let cross = (&a[0] - &cu) * (&b[1] - &cv) - (&a[1] - &cv) * (&b[0] - &cu);
            Rational::zero().cmp(&cross)
        })
    });
    // Start at the lexicographically least vertex.
    let first = (0..pts.len()).min_by(|&i, &j| pts[i].cmp(&pts[j])).expect("nonempty");
    pts.rotate_left(first);
}

fn box_constraints(canvas: &[Rational; 4]) -> [LinearConstraint; 4] {
    let e = |a: i64, b: i64| Vector::new(vec![int(a), int(b)]);
    [
        LinearConstraint::non_strict(e(1, 0), canvas[0].clone()),
        LinearConstraint::non_strict(e(0, 1), canvas[1].clone()),
        LinearConstraint::non_strict(e(-1, 0), -canvas[2].clone()),
        LinearConstraint::non_strict(e(0, -1), -canvas[3].clone()),
    ]
}

fn clip(cs: &[LinearConstraint], canvas: &[Rational; 4]) -> Vec<Point2> {
    let mut all = cs.to_vec();
    all.extend(box_constraints(canvas));
    vertices(&all)
}

/// Bounding box of every cell vertex; unbounded cells widen it so their
/// recession directions stay visible.
fn canvas(cells: &[Vec<LinearConstraint>]) -> [Rational; 4] {
    let mut pts = Vec::new();
    let mut unbounded = false;
    for c in cells {
        let vs = vertices(c);
        // A bounded planar cell has at least three vertices and is cut off
        // by them; anything else recedes to infinity.
        let big = int(1 << 20);
        let probe = clip(c, &[-big.clone(), -big.clone(), big.clone(), big.clone()]);
        if probe.iter().any(|p| p[0].abs() == big || p[1].abs() == big) || vs.len() < 3 {
            unbounded = true;
        }
        pts.extend(vs);
    }
    if pts.is_empty() {
        pts.push([Rational::zero(), Rational::zero()]);
    }
    let min = |k: usize| pts.iter().map(|p| p[k].clone()).min().expect("nonempty");
    let max = |k: usize| pts.iter().map(|p| p[k].clone()).max().expect("nonempty");
    let (u0, v0, u1, v1) = (min(0), min(1), max(0), max(1));
    let extent = std::cmp::max(&u1 - &u0, &v1 - &v0);
    let margin = if unbounded {
        std::cmp::max(extent, Rational::one())
    } else if extent.is_zero() {
        Rational::one()
    } else {
        extent / int(10)
    };
    [&u0 - &margin, &v0 - &margin, &u1 + &margin, &v1 + &margin]
}

/// `q` rounded half away from zero to [`PRECISION`] places.
pub fn fixed(q: &Rational) -> String {
    let scale = Rational::from_integer(num_traits::pow(10u8.into(), PRECISION));
    let scaled = (q * &scale).round().to_integer();
    let negative = scaled.is_negative();
    let digits = format!("{:0>width$}", scaled.abs().to_string(), width = PRECISION + 1);
    let (int_part, frac) = digits.split_at(digits.len() - PRECISION);
    format!("{}{}.{}", if negative { "-" } else { "" }, int_part, frac)
}

/// Deterministic SVG 1.1 document of the section; `v` points up.
pub fn render_section(region: &Region, plane: Option<&Hyperplane>) -> Result<Rendered, Failure> {
    let s = section(region, plane)?;
    let mut warnings = Vec::new();
    if s.polygons.is_empty() {
        warnings.push(match plane {
            Some(_) => "section plane misses the region; emitting an empty canvas".to_string(),
            None => "region is empty; emitting an empty canvas".to_string(),
        });
    }
    let [u0, v0, u1, v1] = &s.canvas;
    let (w, h) = (u1 - u0, v1 - v0);
    let height_px = (Rational::from_integer(WIDTH_PX.into()) * &h / &w).round().to_integer();
    let stroke = std::cmp::max(w.clone(), h.clone()) / int(240);
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{WIDTH_PX}\" height=\"{height_px}\" viewBox=\"{} {} {} {}\">",
        fixed(u0),
        fixed(&-v1.clone()),
        fixed(&w),
        fixed(&h)
    );
    match plane {
        Some(p) => {
            let _ = writeln!(out, "  <desc>section by {p}; u along {:?}, v along {:?}</desc>", coords(&s.basis[0]), coords(&s.basis[1]));
        }
        None => out.push_str("  <desc>planar region</desc>\n"),
    }
    let _ = writeln!(
        out,
        "  <rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"#ffffff\" stroke=\"#b0b0b0\" stroke-width=\"{}\"/>",
        fixed(u0),
        fixed(&-v1.clone()),
        fixed(&w),
        fixed(&h),
        fixed(&stroke)
    );
    let _ = writeln!(
        out,
        "  <g fill=\"#9dbcd4\" fill-opacity=\"0.7\" stroke=\"#1d3549\" stroke-width=\"{}\" stroke-linejoin=\"round\">",
        fixed(&stroke)
    );
    for poly in &s.polygons {
        let mut d = String::new();
        for (i, p) in poly.iter().enumerate() {
            let _ = write!(d, "{}{} {} ", if i == 0 { "M" } else { "L" }, fixed(&p[0]), fixed(&-p[1].clone()));
        }
        d.push('Z');
        let exact: Vec<String> = poly.iter().map(|p| format!("({}, {})", p[0], p[1])).collect();
        let _ = writeln!(out, "    <path d=\"{d}\"><desc>{}</desc></path>", exact.join(" "));
    }
    out.push_str("  </g>\n</svg>\n");
    Ok(Rendered { svg: out, warnings })
}

fn coords(v: &Vector) -> Vec<String> {
    v.coords().iter().map(|c| c.to_string()).collect()
}
