//! Segment arithmetic on the axes of a frame by incidence constructions.
//!
//! Work happens in one corner plane `Pₖ` of a [`FrameWitness`]. Of the two
//! axes lying in `Pₖ`, the *working* axis `l3` carries the operands and the
//! other one is `l1`. The unit line `l2` is the trace of the unit plane on
//! `Pₖ`; it crosses `l3` and `l1` at their units. Only points and lines are
//! built from one another; arithmetic values are read off afterwards by
//! [`point_value`], which makes every construction checkable against plain
//! rational arithmetic.

use alloc::string::String;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::kernel::{AffineMap, Hyperplane, Rational, Vector};
use crate::predicates::{
    classify_lines_in_plane, common_point, third, FrameWitness, LineInPlane, LineRelation,
};

/// A point on a frame axis, marked by a line of a corner plane crossing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxisPoint {
    frame: FrameWitness,
    plane: usize,
    axis: usize,
    marker: LineInPlane,
    point: Vector,
    value: Rational,
}

impl AxisPoint {
    /// Validates that `marker` lies in corner plane `plane` and crosses axis `axis` once.
    pub fn from_marker(frame: &FrameWitness, plane: usize, axis: usize, marker: LineInPlane) -> Result<Self> {
        let l3 = frame.axis_in(plane, axis)?;
        if marker.reference() != frame.plane(plane) {
            return Err(Error::Precondition("marker is not in the reference plane".into()));
        }
        let point = match classify_lines_in_plane(&marker, &l3)? {
            LineRelation::Point(p) => p,
            _ => return Err(Error::Degenerate("marker does not cross the axis".into())),
        };
        let value = frame.coordinates(&point)[axis].clone();
        Ok(AxisPoint {
            frame: frame.clone(),
            plane,
            axis,
            marker,
            point,
            value,
        })
    }

    /// `O`, marked by the other axis of the plane.
    pub fn origin(frame: &FrameWitness, plane: usize, axis: usize) -> Result<Self> {
        let marker = frame.axis_in(plane, third(plane, axis))?;
        Self::from_marker(frame, plane, axis, marker)
    }

    /// The unit of the axis, marked by the unit line.
    pub fn unit(frame: &FrameWitness, plane: usize, axis: usize) -> Result<Self> {
        Self::from_marker(frame, plane, axis, frame.unit_line(plane)?)
    }

    pub fn frame(&self) -> &FrameWitness {
        &self.frame
    }

    pub fn plane(&self) -> usize {
        self.plane
    }

    pub fn axis(&self) -> usize {
        self.axis
    }

    pub fn marker(&self) -> &LineInPlane {
        &self.marker
    }

    pub fn point(&self) -> &Vector {
        &self.point
    }

    /// `t` with `OM = t·OI`.
    pub fn value(&self) -> &Rational {
        &self.value
    }
}

/// Coordinate `t` with `OM = t·OI` of the crossing of `marker` with axis `axis`.
pub fn point_value(frame: &FrameWitness, axis: usize, marker: &LineInPlane) -> Result<Rational> {
    let plane = (0..3)
        .find(|&k| k != axis && frame.plane(k) == marker.reference())
        .ok_or_else(|| Error::Precondition("marker is not in a plane containing the axis".into()))?;
    Ok(AxisPoint::from_marker(frame, plane, axis, marker.clone())?.value)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ConstructionKind {
    Add,
    Multiply,
}

/// Lines and points realizing one addition or multiplication.
///
/// Addition uses lines `l1 l3 m lA lB lC` and points `O A B C J M`;
/// multiplication uses `l1 l2 l3 lA lB lC` and `O I J A B C M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructionWitness {
    kind: ConstructionKind,
    lines: Vec<(String, LineInPlane)>,
    points: Vec<(String, Vector)>,
}

impl ConstructionWitness {
    pub fn new(kind: ConstructionKind, lines: Vec<(String, LineInPlane)>, points: Vec<(String, Vector)>) -> Self {
        ConstructionWitness { kind, lines, points }
    }

    pub fn kind(&self) -> ConstructionKind {
        self.kind
    }

    pub fn lines(&self) -> &[(String, LineInPlane)] {
        &self.lines
    }

    pub fn points(&self) -> &[(String, Vector)] {
        &self.points
    }

    pub fn line(&self, name: &str) -> Option<&LineInPlane> {
        self.lines.iter().find(|(n, _)| n == name).map(|(_, l)| l)
    }

    pub fn point(&self, name: &str) -> Option<&Vector> {
        self.points.iter().find(|(n, _)| n == name).map(|(_, p)| p)
    }

    pub fn line_mut(&mut self, name: &str) -> Option<&mut LineInPlane> {
        self.lines.iter_mut().find(|(n, _)| n == name).map(|(_, l)| l)
    }

    /// Image under an affine map of ℝ³.
    pub fn transform(&self, map: &AffineMap) -> Result<ConstructionWitness> {
        Ok(ConstructionWitness {
            kind: self.kind,
            lines: self
                .lines
                .iter()
                .map(|(n, l)| Ok((n.clone(), l.transform(map)?)))
                .collect::<Result<_>>()?,
            points: self.points.iter().map(|(n, p)| (n.clone(), map.apply(p))).collect(),
        })
    }
}

/// Whether every incidence condition of the witness's construction holds.
pub fn check_witness(w: &ConstructionWitness) -> bool {
    check(w).unwrap_or(false)
}

fn check(w: &ConstructionWitness) -> Option<bool> {
    let line = |n: &str| w.line(n);
    let point = |n: &str| w.point(n);
    let meets_at = |a: &LineInPlane, b: &LineInPlane, p: &Vector| {
        matches!(classify_lines_in_plane(a, b), Ok(LineRelation::Point(q)) if &q == p)
    };
    let parallel_or_same = |a: &LineInPlane, b: &LineInPlane| {
        matches!(
            classify_lines_in_plane(a, b),
            Ok(LineRelation::Parallel | LineRelation::Coincident)
        )
    };
    let concurrent_at = |ls: &[&LineInPlane], p: &Vector| common_point(ls).as_ref() == Some(p);
    let (l1, l3, la, lb, lc) = (line("l1")?, line("l3")?, line("lA")?, line("lB")?, line("lC")?);
    let (o, a, b, c, j, m) = (point("O")?, point("A")?, point("B")?, point("C")?, point("J")?, point("M")?);
    let base = meets_at(l1, l3, o)
        && meets_at(la, l3, a)
        && meets_at(lb, l3, b)
        && meets_at(lc, l3, c)
        && parallel_or_same(lc, lb);
    Some(match w.kind {
        ConstructionKind::Add => {
            let mm = line("m")?;
            base && classify_lines_in_plane(mm, l3).ok()? == LineRelation::Parallel
                && parallel_or_same(la, l1)
                && concurrent_at(&[lb, l1, mm], j)
                && concurrent_at(&[la, lc, mm], m)
        }
        ConstructionKind::Multiply => {
            let l2 = line("l2")?;
            let i = point("I")?;
            base && meets_at(l2, l1, j)
                && meets_at(l2, l3, i)
                && parallel_or_same(la, l2)
                && concurrent_at(&[lb, l1, l2], j)
                && concurrent_at(&[lc, la, l1], m)
        }
    })
}

/// Affine chart of one corner plane with the working axis as first coordinate.
struct Chart<'f> {
    frame: &'f FrameWitness,
    plane: usize,
    axis: usize,
    reference: Hyperplane,
    off_plane: Vector,
    l1: LineInPlane,
    l2: LineInPlane,
    l3: LineInPlane,
}

impl<'f> Chart<'f> {
    fn new(frame: &'f FrameWitness, plane: usize, axis: usize) -> Result<Self> {
        let l3 = frame.axis_in(plane, axis)?;
        let l1 = frame.axis_in(plane, third(plane, axis))?;
        Ok(Chart {
            frame,
            plane,
            axis,
            reference: frame.plane(plane).clone(),
            off_plane: frame.unit(plane).sub(frame.origin()),
            l1,
            l2: frame.unit_line(plane)?,
            l3,
        })
    }

    fn for_points(a: &'f AxisPoint, b: &AxisPoint) -> Result<Self> {
        if a.frame != b.frame || a.plane != b.plane || a.axis != b.axis {
            return Err(Error::Precondition("operands must share frame, plane and axis".into()));
        }
        Self::new(&a.frame, a.plane, a.axis)
    }

    /// Line of the reference plane through `p` with in-plane direction `d`.
    fn line(&self, p: &Vector, d: &Vector) -> LineInPlane {
        let normal = d.cross(&self.off_plane);
        let cutter = Hyperplane::through(normal, p).expect("in-plane direction is not along the off-plane axis");
        LineInPlane::new(self.reference.clone(), cutter).expect("cutter crosses the reference plane")
    }

    fn through(&self, p: &Vector, q: &Vector) -> LineInPlane {
        self.line(p, &q.sub(p))
    }

    fn meet(&self, a: &LineInPlane, b: &LineInPlane) -> Result<Vector> {
        match classify_lines_in_plane(a, b)? {
            LineRelation::Point(p) => Ok(p),
            _ => Err(Error::Degenerate("construction lines fail to meet".into())),
        }
    }

    fn result(&self, marker: LineInPlane) -> Result<AxisPoint> {
        AxisPoint::from_marker(self.frame, self.plane, self.axis, marker)
    }

    fn add_witness(&self, m: &LineInPlane, la: &LineInPlane, lb: &LineInPlane, lc: &LineInPlane) -> Result<ConstructionWitness> {
        let o = self.meet(&self.l1, &self.l3)?;
        let a = self.meet(la, &self.l3)?;
        let b = self.meet(lb, &self.l3)?;
        let c = self.meet(lc, &self.l3)?;
        let j = self.meet(&self.l1, m)?;
        let mm = self.meet(la, m)?;
        Ok(named(
            ConstructionKind::Add,
            [("l1", &self.l1), ("l3", &self.l3), ("m", m), ("lA", la), ("lB", lb), ("lC", lc)],
            [("O", o), ("A", a), ("B", b), ("C", c), ("J", j), ("M", mm)],
        ))
    }

    fn multiply_witness(&self, la: &LineInPlane, lb: &LineInPlane, lc: &LineInPlane) -> Result<ConstructionWitness> {
        let o = self.meet(&self.l1, &self.l3)?;
        let i = self.meet(&self.l2, &self.l3)?;
        let j = self.meet(&self.l2, &self.l1)?;
        let a = self.meet(la, &self.l3)?;
        let b = self.meet(lb, &self.l3)?;
        let c = self.meet(lc, &self.l3)?;
        let m = self.meet(la, &self.l1)?;
        Ok(named(
            ConstructionKind::Multiply,
            [("l1", &self.l1), ("l2", &self.l2), ("l3", &self.l3), ("lA", la), ("lB", lb), ("lC", lc)],
            [("O", o), ("I", i), ("J", j), ("A", a), ("B", b), ("C", c), ("M", m)],
        ))
    }
}

fn named<const L: usize, const P: usize>(
    kind: ConstructionKind,
    lines: [(&str, &LineInPlane); L],
    points: [(&str, Vector); P],
) -> ConstructionWitness {
    ConstructionWitness {
        kind,
        lines: lines.into_iter().map(|(n, l)| (n.into(), l.clone())).collect(),
        points: points.into_iter().map(|(n, p)| (n.into(), p)).collect(),
    }
}

/// `OA + OB = OC`, with the auxiliary line `m` through the unit of `l1`.
pub fn vs_add(a: &AxisPoint, b: &AxisPoint) -> Result<(AxisPoint, ConstructionWitness)> {
    let chart = Chart::for_points(a, b)?;
    let j = chart.frame.unit(third(chart.plane, chart.axis)).clone();
    let along_l3 = chart.l3.direction();
    let m = chart.line(&j, &along_l3);
    let la = chart.line(&a.point, &chart.l1.direction());
    let lb = chart.through(&b.point, &j);
    let meet = chart.meet(&la, &m)?;
    let lc = chart.line(&meet, &lb.direction());
    let w = chart.add_witness(&m, &la, &lb, &lc)?;
    Ok((chart.result(lc)?, w))
}

/// `OA · OB = OC`.
pub fn vs_multiply(a: &AxisPoint, b: &AxisPoint) -> Result<(AxisPoint, ConstructionWitness)> {
    let chart = Chart::for_points(a, b)?;
    let j = chart.meet(&chart.l2, &chart.l1)?;
    let la = chart.line(&a.point, &chart.l2.direction());
    let lb = chart.through(&b.point, &j);
    let meet = chart.meet(&la, &chart.l1)?;
    let lc = chart.line(&meet, &lb.direction());
    let w = chart.multiply_witness(&la, &lb, &lc)?;
    Ok((chart.result(lc)?, w))
}

/// `M + I`.
pub fn successor(m: &AxisPoint) -> Result<(AxisPoint, ConstructionWitness)> {
    let unit = AxisPoint::unit(&m.frame, m.plane, m.axis)?;
    vs_add(m, &unit)
}

/// The point `B` with `OM + OB = OO`, found by running the addition backwards.
pub fn negate(m: &AxisPoint) -> Result<(AxisPoint, ConstructionWitness)> {
    let chart = Chart::new(&m.frame, m.plane, m.axis)?;
    let j = chart.frame.unit(third(chart.plane, chart.axis)).clone();
    let aux = chart.line(&j, &chart.l3.direction());
    let la = chart.line(&m.point, &chart.l1.direction());
    let top = chart.meet(&la, &aux)?;
    let lc = chart.through(chart.frame.origin(), &top);
    let lb = chart.line(&j, &lc.direction());
    let w = chart.add_witness(&aux, &la, &lb, &lc)?;
    Ok((chart.result(lb)?, w))
}

/// The point `M` with `OQ · OM = OP`, found by running the multiplication backwards.
fn divide(p: &AxisPoint, q: &AxisPoint) -> Result<(AxisPoint, ConstructionWitness)> {
    let chart = Chart::for_points(p, q)?;
    if q.value.is_zero() {
        return Err(Error::Degenerate("division by the origin".into()));
    }
    let j = chart.meet(&chart.l2, &chart.l1)?;
    let la = chart.line(&q.point, &chart.l2.direction());
    let top = chart.meet(&la, &chart.l1)?;
    let lc = chart.through(&p.point, &top);
    let lb = chart.line(&j, &lc.direction());
    let w = chart.multiply_witness(&la, &lb, &lc)?;
    Ok((chart.result(lb)?, w))
}

/// `n·OI` by doubling and adding the unit.
fn natural(
    frame: &FrameWitness,
    plane: usize,
    axis: usize,
    n: &num_bigint::BigUint,
    certificate: &mut Vec<ConstructionWitness>,
) -> Result<AxisPoint> {
    if n.is_zero() {
        return AxisPoint::origin(frame, plane, axis);
    }
    let unit = AxisPoint::unit(frame, plane, axis)?;
    let mut acc = unit.clone();
    for i in (0..n.bits() - 1).rev() {
        let (doubled, w) = vs_add(&acc, &acc)?;
        certificate.push(w);
        acc = doubled;
        if n.bit(i) {
            let (next, w) = vs_add(&acc, &unit)?;
            certificate.push(w);
            acc = next;
        }
    }
    Ok(acc)
}

/// A constructed axis point of value `q` with the witnesses that build it.
///
/// For `q = p/r` in lowest terms with `r > 1`, the last two witnesses are
/// `OR · OM = OP` and `OP · OI = OP`, which share their result point.
pub fn encode_rational(
    frame: &FrameWitness,
    plane: usize,
    axis: usize,
    q: &Rational,
) -> Result<(AxisPoint, Vec<ConstructionWitness>)> {
    let mut certificate = Vec::new();
    let (num, den) = (q.numer(), q.denom());
    let mut p = natural(frame, plane, axis, &num.abs().to_biguint().expect("nonnegative"), &mut certificate)?;
    if num.is_negative() {
        let (neg, w) = negate(&p)?;
        certificate.push(w);
        p = neg;
    }
    if den.is_one() {
        return Ok((p, certificate));
    }
    let r = natural(frame, plane, axis, &den.to_biguint().expect("positive"), &mut certificate)?;
    let (m, w) = divide(&p, &r)?;
    certificate.push(w);
    let unit = AxisPoint::unit(frame, plane, axis)?;
    let (_, w) = vs_multiply(&p, &unit)?;
    certificate.push(w);
    Ok((m, certificate))
}
