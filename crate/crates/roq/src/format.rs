//! JSON file formats.
//!
//! Rationals are strings `"p/q"` or `"p"`, vectors are arrays of such
//! strings. Readers canonicalize whatever they are given; writers emit the
//! canonical form, so identical values always serialize to identical bytes.

use std::str::FromStr;

use roq_core::fixing::{Combination, HalfSpaceDescriptor, RegionDescriptor, Trace};
use roq_core::kernel::{AffineMap, HalfSpace, Hyperplane, Matrix, Rational, Side, Vector};
use roq_core::predicates::{check_frame, FrameWitness, LineInPlane};
use roq_core::region::Region;
use roq_core::vonstaudt::{AxisPoint, ConstructionKind, ConstructionWitness};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::Failure;

pub fn parse_rational(text: &str) -> Result<Rational, Failure> {
    let t = text.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let n = num_like(num).ok_or_else(|| Failure::malformed(format!("not a rational: {text:?}")))?;
    let d = num_like(den).ok_or_else(|| Failure::malformed(format!("not a rational: {text:?}")))?;
    if d == Rational::from_integer(0.into()) {
        return Err(Failure::malformed(format!("zero denominator in {text:?}")));
    }
    Ok(n / d)
}

/// Integer or terminating decimal.
fn num_like(s: &str) -> Option<Rational> {
    if let Some((int, frac)) = s.split_once('.') {
        let negative = int.starts_with('-');
        let digits = format!("{}{}", int.trim_start_matches(['-', '+']), frac);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let n = Rational::from_str(&digits).ok()?;
        let scale = Rational::from_integer(num_traits::pow(10u8.into(), frac.len()));
        let v = n / scale;
        Some(if negative { -v } else { v })
    } else {
        Rational::from_str(s).ok()
    }
}

pub fn rational_text(q: &Rational) -> String {
    q.to_string()
}

pub fn vector_json(v: &Vector) -> Vec<String> {
    v.coords().iter().map(rational_text).collect()
}

pub fn parse_vector(items: &[String]) -> Result<Vector, Failure> {
    Ok(Vector::new(items.iter().map(|s| parse_rational(s)).collect::<Result<_, _>>()?))
}

/// Comma-separated rationals, as typed on a command line.
pub fn parse_vector_arg(text: &str) -> Result<Vector, Failure> {
    let items: Vec<String> = text.split(',').map(str::to_string).collect();
    parse_vector(&items)
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct PlaneJson {
    pub normal: Vec<String>,
    pub offset: String,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct HalfSpaceJson {
    pub normal: Vec<String>,
    pub offset: String,
    pub side: String,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct RegionJson {
    pub dim: usize,
    pub cells: Vec<Vec<HalfSpaceJson>>,
}

pub fn plane_json(p: &Hyperplane) -> PlaneJson {
    PlaneJson { normal: vector_json(p.normal()), offset: rational_text(p.offset()) }
}

pub fn plane_from_json(p: &PlaneJson) -> Result<Hyperplane, Failure> {
    Ok(Hyperplane::new(parse_vector(&p.normal)?, parse_rational(&p.offset)?)?)
}

fn side_text(s: Side) -> String {
    s.symbol().to_string()
}

fn parse_side(s: &str) -> Result<Side, Failure> {
    match s.trim() {
        "+" | ">" | "pos" => Ok(Side::Pos),
        "-" | "<" | "neg" => Ok(Side::Neg),
        other => Err(Failure::malformed(format!("unknown side {other:?}"))),
    }
}

pub fn halfspace_json(h: &HalfSpace) -> HalfSpaceJson {
    HalfSpaceJson {
        normal: vector_json(h.plane().normal()),
        offset: rational_text(h.plane().offset()),
        side: side_text(h.side()),
    }
}

pub fn halfspace_from_json(h: &HalfSpaceJson) -> Result<HalfSpace, Failure> {
    Ok(HalfSpace::new(parse_vector(&h.normal)?, parse_rational(&h.offset)?, parse_side(&h.side)?)?)
}

pub fn region_json(r: &Region) -> RegionJson {
    let cells = r
        .cells()
        .iter()
        .map(|c| c.reduced().constraints().iter().map(halfspace_json).collect())
        .collect();
    RegionJson { dim: r.dim(), cells }
}

pub fn region_from_json(r: &RegionJson) -> Result<Region, Failure> {
    let cells = r
        .cells
        .iter()
        .map(|c| c.iter().map(halfspace_from_json).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Region::from_cells(r.dim, &cells)?)
}

pub fn parse_region(text: &str) -> Result<Region, Failure> {
    let r: RegionJson = from_text(text)?;
    region_from_json(&r)
}

/// A half-space object, or a region file whose region is a half-space.
pub fn parse_halfspace(text: &str) -> Result<HalfSpace, Failure> {
    let v: Value = from_text(text)?;
    if v.get("cells").is_some() {
        let r = region_from_json(&from_value(v)?)?;
        r.as_halfspace()
            .ok_or_else(|| Failure::precondition("region is not a half-space"))
    } else {
        halfspace_from_json(&from_value(v)?)
    }
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct FrameJson {
    pub halfspaces: Vec<HalfSpaceJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub origin: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub units: Option<Vec<Vec<String>>>,
}

pub fn frame_json(f: &FrameWitness) -> FrameJson {
    FrameJson {
        halfspaces: f.halfspaces().iter().map(halfspace_json).collect(),
        origin: Some(vector_json(f.origin())),
        units: Some((0..3).map(|j| vector_json(f.unit(j))).collect()),
    }
}

/// Rebuilds the frame from its half-spaces; stored points must agree.
pub fn frame_from_json(f: &FrameJson) -> Result<FrameWitness, Failure> {
    let hs = f.halfspaces.iter().map(halfspace_from_json).collect::<Result<Vec<_>, _>>()?;
    let [a, b, c, d]: [HalfSpace; 4] = hs
        .try_into()
        .map_err(|_| Failure::malformed("a frame has exactly four half-spaces"))?;
    let w = check_frame(&a, &b, &c, &d).ok_or_else(|| Failure::precondition("half-spaces do not form a frame"))?;
    if let Some(o) = &f.origin {
        if &parse_vector(o)? != w.origin() {
            return Err(Failure::precondition("stored origin disagrees with the planes"));
        }
    }
    if let Some(us) = &f.units {
        if us.len() != 3 {
            return Err(Failure::malformed("a frame has three units"));
        }
        for (j, u) in us.iter().enumerate() {
            if &parse_vector(u)? != w.unit(j) {
                return Err(Failure::precondition(format!("stored unit {j} disagrees with the planes")));
            }
        }
    }
    Ok(w)
}

pub fn parse_frame(text: &str) -> Result<FrameWitness, Failure> {
    frame_from_json(&from_text(text)?)
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct LineJson {
    pub reference: PlaneJson,
    pub cutter: PlaneJson,
}

pub fn line_json(l: &LineInPlane) -> LineJson {
    LineJson { reference: plane_json(l.reference()), cutter: plane_json(l.cutter()) }
}

pub fn line_from_json(l: &LineJson) -> Result<LineInPlane, Failure> {
    Ok(LineInPlane::new(plane_from_json(&l.reference)?, plane_from_json(&l.cutter)?)?)
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct NamedLine {
    pub name: String,
    #[serde(flatten)]
    pub line: LineJson,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct NamedPoint {
    pub name: String,
    pub coords: Vec<String>,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct WitnessJson {
    pub kind: String,
    pub lines: Vec<NamedLine>,
    pub points: Vec<NamedPoint>,
}

pub fn witness_json(w: &ConstructionWitness) -> WitnessJson {
    WitnessJson {
        kind: match w.kind() {
            ConstructionKind::Add => "add".into(),
            ConstructionKind::Multiply => "mul".into(),
        },
        lines: w
            .lines()
            .iter()
            .map(|(n, l)| NamedLine { name: n.clone(), line: line_json(l) })
            .collect(),
        points: w
            .points()
            .iter()
            .map(|(n, p)| NamedPoint { name: n.clone(), coords: vector_json(p) })
            .collect(),
    }
}

pub fn witness_from_json(w: &WitnessJson) -> Result<ConstructionWitness, Failure> {
    let kind = match w.kind.as_str() {
        "add" => ConstructionKind::Add,
        "mul" => ConstructionKind::Multiply,
        other => return Err(Failure::malformed(format!("unknown construction {other:?}"))),
    };
    let lines = w
        .lines
        .iter()
        .map(|l| Ok((l.name.clone(), line_from_json(&l.line)?)))
        .collect::<Result<_, Failure>>()?;
    let points = w
        .points
        .iter()
        .map(|p| Ok((p.name.clone(), parse_vector(&p.coords)?)))
        .collect::<Result<_, Failure>>()?;
    Ok(ConstructionWitness::new(kind, lines, points))
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct AxisPointJson {
    pub plane: usize,
    pub axis: usize,
    pub value: String,
    pub point: Vec<String>,
    pub marker: LineJson,
}

pub fn axis_point_json(p: &AxisPoint) -> AxisPointJson {
    AxisPointJson {
        plane: p.plane(),
        axis: p.axis(),
        value: rational_text(p.value()),
        point: vector_json(p.point()),
        marker: line_json(p.marker()),
    }
}

/// Rebuilds the point from its marker; the stored value is not trusted.
pub fn axis_point_from_json(frame: &FrameWitness, p: &AxisPointJson) -> Result<AxisPoint, Failure> {
    Ok(AxisPoint::from_marker(frame, p.plane, p.axis, line_from_json(&p.marker)?)?)
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
#[serde(rename_all = "lowercase")]
pub enum TraceJson {
    Crosses(String),
    Parallel,
    Contains,
}

fn trace_json(t: &Trace) -> TraceJson {
    match t {
        Trace::Crosses(q) => TraceJson::Crosses(rational_text(q)),
        Trace::Parallel => TraceJson::Parallel,
        Trace::Contains => TraceJson::Contains,
    }
}

fn trace_from_json(t: &TraceJson) -> Result<Trace, Failure> {
    Ok(match t {
        TraceJson::Crosses(q) => Trace::Crosses(parse_rational(q)?),
        TraceJson::Parallel => Trace::Parallel,
        TraceJson::Contains => Trace::Contains,
    })
}

fn traces(ts: &[TraceJson]) -> Result<[Trace; 3], Failure> {
    let v = ts.iter().map(trace_from_json).collect::<Result<Vec<_>, _>>()?;
    v.try_into().map_err(|_| Failure::malformed("expected three traces"))
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct DescriptorJson {
    pub plane: PlaneJson,
    pub side: String,
    pub axis_traces: Vec<TraceJson>,
    pub unit_traces: Vec<TraceJson>,
}

pub fn descriptor_json(d: &HalfSpaceDescriptor) -> DescriptorJson {
    DescriptorJson {
        plane: plane_json(&d.plane),
        side: side_text(d.side),
        axis_traces: d.axis_traces.iter().map(trace_json).collect(),
        unit_traces: d.unit_traces.iter().map(trace_json).collect(),
    }
}

pub fn descriptor_from_json(d: &DescriptorJson) -> Result<HalfSpaceDescriptor, Failure> {
    Ok(HalfSpaceDescriptor {
        plane: plane_from_json(&d.plane)?,
        side: parse_side(&d.side)?,
        axis_traces: traces(&d.axis_traces)?,
        unit_traces: traces(&d.unit_traces)?,
    })
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
#[serde(rename_all = "lowercase")]
pub enum CombinationJson {
    Zero,
    One,
    Literal(usize),
    Complement(Box<CombinationJson>),
    Product(Vec<CombinationJson>),
    Sum(Vec<CombinationJson>),
}

fn combination_json(c: &Combination) -> CombinationJson {
    match c {
        Combination::Zero => CombinationJson::Zero,
        Combination::One => CombinationJson::One,
        Combination::Literal(i) => CombinationJson::Literal(*i),
        Combination::Complement(x) => CombinationJson::Complement(Box::new(combination_json(x))),
        Combination::Product(xs) => CombinationJson::Product(xs.iter().map(combination_json).collect()),
        Combination::Sum(xs) => CombinationJson::Sum(xs.iter().map(combination_json).collect()),
    }
}

fn combination_from_json(c: &CombinationJson) -> Combination {
    match c {
        CombinationJson::Zero => Combination::Zero,
        CombinationJson::One => Combination::One,
        CombinationJson::Literal(i) => Combination::Literal(*i),
        CombinationJson::Complement(x) => Combination::Complement(Box::new(combination_from_json(x))),
        CombinationJson::Product(xs) => Combination::Product(xs.iter().map(combination_from_json).collect()),
        CombinationJson::Sum(xs) => Combination::Sum(xs.iter().map(combination_from_json).collect()),
    }
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct RegionDescriptorJson {
    pub halfspaces: Vec<DescriptorJson>,
    pub combination: CombinationJson,
}

pub fn region_descriptor_json(d: &RegionDescriptor) -> RegionDescriptorJson {
    RegionDescriptorJson {
        halfspaces: d.halfspaces.iter().map(descriptor_json).collect(),
        combination: combination_json(&d.combination),
    }
}

pub fn region_descriptor_from_json(d: &RegionDescriptorJson) -> Result<RegionDescriptor, Failure> {
    Ok(RegionDescriptor {
        halfspaces: d.halfspaces.iter().map(descriptor_from_json).collect::<Result<_, _>>()?,
        combination: combination_from_json(&d.combination),
    })
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct AffineJson {
    pub linear: Vec<Vec<String>>,
    pub translation: Vec<String>,
}

pub fn affine_json(m: &AffineMap) -> AffineJson {
    AffineJson {
        linear: m.linear().rows().iter().map(|r| r.iter().map(rational_text).collect()).collect(),
        translation: vector_json(m.translation()),
    }
}

pub fn affine_from_json(m: &AffineJson) -> Result<AffineMap, Failure> {
    let rows = m
        .linear
        .iter()
        .map(|r| r.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    if rows.iter().any(|r| r.len() != rows.len()) {
        return Err(Failure::malformed("linear part must be square"));
    }
    Ok(AffineMap::new(Matrix::from_rows(rows), parse_vector(&m.translation)?)?)
}

pub fn from_text<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T, Failure> {
    serde_json::from_str(text).map_err(|e| Failure::malformed(e.to_string()))
}

fn from_value<T: for<'de> Deserialize<'de>>(v: Value) -> Result<T, Failure> {
    serde_json::from_value(v).map_err(|e| Failure::malformed(e.to_string()))
}

/// Pretty JSON with a trailing newline.
pub fn to_text<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}
