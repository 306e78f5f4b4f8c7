//! JSON documents read and written by the command-line tool.
//!
//! Scalars are arrays: `[re]` over the reals, `[re, im]` over the complex
//! numbers. Matrices of projective maps and parameter matrices are flattened
//! row-major; subspace bases are flattened column-major. On input `field`
//! and `n` may be omitted: the field then comes from `--field` or, failing
//! that, from the entries, and `n` from the entry count.

use std::io::Write;

use projgeo_core::fibration::ExtendedComplex;
use projgeo_core::grassmann::Subspace;
use projgeo_core::hopf_manifold::{HopfPoint, ScaleGroup};
use projgeo_core::numerics::{CMat, CVec};
use projgeo_core::{Field, Mat, ProjMap, ProjPoint, Tolerance, C64};
use serde::{Deserialize, Serialize};
use serde_json::ser::{CompactFormatter, Formatter};
use serde_json::Value;

use crate::error::CliError;

pub type Entry = Vec<f64>;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PointDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    pub h: Vec<Entry>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MapDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(rename = "M")]
    pub m: Vec<Entry>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SubspaceDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<String>,
    pub n: usize,
    pub k: usize,
    pub basis: Vec<Entry>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct HopfDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<Entry>,
    pub rep: Vec<Entry>,
    /// The `m` with `rep = λ⁻ᵐ v`; written by `hopf project`, ignored on input.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exponent: Option<i32>,
}

/// A point of the affine chart `j` (one-based).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ChartDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    pub j: usize,
    /// `None` when the point lies on the chart's missing hyperplane.
    pub w: Option<Vec<Entry>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ParamsDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<String>,
    pub rows: usize,
    pub cols: usize,
    /// `None` when the subspace is not transverse to the chart complement.
    pub entries: Option<Vec<Entry>>,
}

/// A point of `C ∪ {∞}`: `{"z": [re, im]}` or `{"z": "inf"}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ExtendedDoc {
    pub z: Value,
}

/// What a JSON input file contains, told apart by its distinguishing key.
#[derive(Debug, Clone)]
pub enum Document {
    Point(PointDoc),
    Subspace(SubspaceDoc),
    Hopf(HopfDoc),
    Extended(ExtendedDoc),
    Map(MapDoc),
    Chart(ChartDoc),
    Params(ParamsDoc),
}

impl Document {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let value: Value = serde_json::from_str(text)?;
        let obj = value
            .as_object()
            .ok_or_else(|| CliError::bad_input("expected a JSON object"))?;
        let kind = ["k", "rep", "h", "z", "M", "j", "rows"]
            .into_iter()
            .find(|key| obj.contains_key(*key))
            .ok_or_else(|| CliError::bad_input("unrecognized document"))?;
        Ok(match kind {
            "k" => Document::Subspace(serde_json::from_value(value)?),
            "rep" => Document::Hopf(serde_json::from_value(value)?),
            "h" => Document::Point(serde_json::from_value(value)?),
            "z" => Document::Extended(serde_json::from_value(value)?),
            "M" => Document::Map(serde_json::from_value(value)?),
            "j" => Document::Chart(serde_json::from_value(value)?),
            _ => Document::Params(serde_json::from_value(value)?),
        })
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Document::Point(_) => "point",
            Document::Subspace(_) => "subspace",
            Document::Hopf(_) => "hopf point",
            Document::Extended(_) => "extended complex number",
            Document::Map(_) => "map",
            Document::Chart(_) => "chart point",
            Document::Params(_) => "parameter matrix",
        }
    }
}

// ---- scalars ---------------------------------------------------------------

pub fn entry_to_scalar(e: &[f64]) -> Result<C64, CliError> {
    let z = match e {
        [re] => C64::new(*re, 0.0),
        [re, im] => C64::new(*re, *im),
        _ => {
            return Err(CliError::bad_input(format!(
                "scalar must be [re] or [re, im], got {} numbers",
                e.len()
            )))
        }
    };
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(CliError::bad_input("non-finite scalar"));
    }
    Ok(z)
}

pub fn scalar_to_entry(field: Field, z: C64) -> Entry {
    match field {
        Field::Real => vec![z.re],
        Field::Complex => vec![z.re, z.im],
    }
}

fn entries_to_scalars(entries: &[Entry]) -> Result<Vec<C64>, CliError> {
    entries.iter().map(|e| entry_to_scalar(e)).collect()
}

fn parse_field(name: &str) -> Result<Field, CliError> {
    name.parse::<Field>()
        .map_err(|_| CliError::bad_input(format!("unknown field `{name}`")))
}

/// Field of a document: its own `field`, else `flag`, else complex iff any
/// entry has a nonzero imaginary part.
pub fn resolve_field(declared: Option<&str>, flag: Option<Field>, scalars: &[C64]) -> Result<Field, CliError> {
    let inferred = if scalars.iter().any(|z| z.im != 0.0) {
        Field::Complex
    } else {
        Field::Real
    };
    let field = match (declared.map(parse_field).transpose()?, flag) {
        (Some(d), Some(f)) if d != f => {
            return Err(CliError::mismatch(format!("document is over {d} but --field is {f}")))
        }
        (Some(d), _) => d,
        (None, Some(f)) => f,
        (None, None) => inferred,
    };
    if field == Field::Real && inferred == Field::Complex {
        return Err(CliError::mismatch("complex entries in a real document"));
    }
    Ok(field)
}

fn check_count(what: &str, expected: usize, found: usize) -> Result<(), CliError> {
    if expected == found {
        Ok(())
    } else {
        Err(CliError::mismatch(format!(
            "{what}: expected {expected} entries, found {found}"
        )))
    }
}

fn flatten_row_major(m: &CMat, field: Field) -> Vec<Entry> {
    (0..m.nrows())
        .flat_map(|i| (0..m.ncols()).map(move |j| (i, j)))
        .map(|(i, j)| scalar_to_entry(field, m[(i, j)]))
        .collect()
}

fn flatten_column_major(m: &CMat, field: Field) -> Vec<Entry> {
    m.iter().map(|z| scalar_to_entry(field, *z)).collect()
}

// ---- conversions -----------------------------------------------------------

impl PointDoc {
    pub fn to_point(&self, flag: Option<Field>, tol: &Tolerance) -> Result<ProjPoint, CliError> {
        let h = entries_to_scalars(&self.h)?;
        let field = resolve_field(self.field.as_deref(), flag, &h)?;
        if let Some(n) = self.n {
            check_count("point", n + 1, h.len())?;
        }
        Ok(ProjPoint::from_vector(field, &CVec::from_vec(h), tol)?)
    }

    pub fn from_point(p: &ProjPoint) -> Self {
        Self {
            field: Some(p.field().to_string()),
            n: Some(p.dim()),
            h: p.coords().iter().map(|z| scalar_to_entry(p.field(), *z)).collect(),
        }
    }
}

impl MapDoc {
    /// The matrix as given, before projective normalization.
    pub fn to_matrix(&self, flag: Option<Field>) -> Result<Mat, CliError> {
        let m = entries_to_scalars(&self.m)?;
        let field = resolve_field(self.field.as_deref(), flag, &m)?;
        let size = match self.n {
            Some(n) => n + 1,
            None => (m.len() as f64).sqrt().round() as usize,
        };
        check_count("map", size * size, m.len())?;
        Ok(Mat::new(field, CMat::from_row_slice(size, size, &m))?)
    }

    pub fn to_map(&self, flag: Option<Field>, tol: &Tolerance) -> Result<ProjMap, CliError> {
        Ok(ProjMap::from_matrix(&self.to_matrix(flag)?, tol)?)
    }

    pub fn from_map(t: &ProjMap) -> Self {
        Self {
            field: Some(t.field().to_string()),
            n: Some(t.dim()),
            m: flatten_row_major(t.as_matrix(), t.field()),
        }
    }
}

impl SubspaceDoc {
    pub fn to_subspace(&self, flag: Option<Field>, tol: &Tolerance) -> Result<Subspace, CliError> {
        let b = entries_to_scalars(&self.basis)?;
        let field = resolve_field(self.field.as_deref(), flag, &b)?;
        check_count("subspace basis", self.n * self.k, b.len())?;
        let m = Mat::new(field, CMat::from_column_slice(self.n, self.k, &b))?;
        let s = Subspace::span(&m, tol)?;
        if s.dim() != self.k {
            return Err(CliError::bad_input(format!(
                "basis spans a {}-dimensional subspace, not {}",
                s.dim(),
                self.k
            )));
        }
        Ok(s)
    }

    pub fn from_subspace(s: &Subspace) -> Self {
        Self {
            field: Some(s.field().to_string()),
            n: s.ambient_dim(),
            k: s.dim(),
            basis: flatten_column_major(s.basis().as_matrix(), s.field()),
        }
    }
}

impl HopfDoc {
    /// The raw vector and the scale group: `lambda_flag` if given, else the
    /// document's `lambda`, else 2.
    pub fn to_vector(
        &self,
        field_flag: Option<Field>,
        lambda_flag: Option<C64>,
        tol: &Tolerance,
    ) -> Result<(CVec, ScaleGroup), CliError> {
        let rep = entries_to_scalars(&self.rep)?;
        let lambda = match (lambda_flag, &self.lambda) {
            (Some(l), _) => l,
            (None, Some(e)) => entry_to_scalar(e)?,
            (None, None) => C64::new(2.0, 0.0),
        };
        let field = resolve_field(self.field.as_deref(), field_flag, &rep)?;
        if let Some(n) = self.n {
            check_count("hopf point", n, rep.len())?;
        }
        let group = ScaleGroup::new(field, lambda, tol)?;
        Ok((CVec::from_vec(rep), group))
    }

    pub fn from_hopf(h: &HopfPoint, exponent: Option<i32>) -> Self {
        let field = h.group().field();
        Self {
            field: Some(field.to_string()),
            n: Some(h.dim()),
            lambda: Some(scalar_to_entry(field, h.group().lambda())),
            rep: h.rep().iter().map(|z| scalar_to_entry(field, *z)).collect(),
            exponent,
        }
    }
}

impl ChartDoc {
    pub fn to_vector(&self, flag: Option<Field>) -> Result<(Field, CVec), CliError> {
        let w = self
            .w
            .as_ref()
            .ok_or_else(|| CliError::bad_input("chart point has no coordinates"))?;
        let w = entries_to_scalars(w)?;
        let field = resolve_field(self.field.as_deref(), flag, &w)?;
        if let Some(n) = self.n {
            check_count("chart point", n, w.len())?;
        }
        Ok((field, CVec::from_vec(w)))
    }

    pub fn new(field: Field, n: usize, j: usize, w: Option<&CVec>) -> Self {
        Self {
            field: Some(field.to_string()),
            n: Some(n),
            j,
            w: w.map(|w| w.iter().map(|z| scalar_to_entry(field, *z)).collect()),
        }
    }
}

impl ParamsDoc {
    pub fn to_matrix(&self, flag: Option<Field>) -> Result<Mat, CliError> {
        let e = self
            .entries
            .as_ref()
            .ok_or_else(|| CliError::bad_input("parameter matrix has no entries"))?;
        let e = entries_to_scalars(e)?;
        let field = resolve_field(self.field.as_deref(), flag, &e)?;
        check_count("parameter matrix", self.rows * self.cols, e.len())?;
        Ok(Mat::new(field, CMat::from_row_slice(self.rows, self.cols, &e))?)
    }

    pub fn new(field: Field, rows: usize, cols: usize, a: Option<&Mat>) -> Self {
        Self {
            field: Some(field.to_string()),
            rows,
            cols,
            entries: a.map(|a| flatten_row_major(a.as_matrix(), field)),
        }
    }
}

impl ExtendedDoc {
    pub fn to_extended(&self) -> Result<ExtendedComplex, CliError> {
        match &self.z {
            Value::String(s) if s == "inf" => Ok(ExtendedComplex::Infinity),
            Value::Array(_) => {
                let e: Entry = serde_json::from_value(self.z.clone())?;
                Ok(ExtendedComplex::Finite(entry_to_scalar(&e)?))
            }
            _ => Err(CliError::bad_input("z must be [re, im] or \"inf\"")),
        }
    }

    pub fn from_extended(z: ExtendedComplex) -> Self {
        let z = match z {
            ExtendedComplex::Infinity => Value::String("inf".into()),
            ExtendedComplex::Finite(z) => serde_json::json!([z.re, z.im]),
        };
        Self { z }
    }
}

// ---- output ----------------------------------------------------------------

/// Compact JSON with every float written to 17 significant digits.
struct RoundTripFormatter(CompactFormatter);

impl Formatter for RoundTripFormatter {
    fn write_f64<W: ?Sized + Write>(&mut self, writer: &mut W, value: f64) -> std::io::Result<()> {
        write!(writer, "{}", format_f64(value))
    }

    fn write_f32<W: ?Sized + Write>(&mut self, writer: &mut W, value: f32) -> std::io::Result<()> {
        self.write_f64(writer, f64::from(value))
    }
}

/// `value` with 17 significant digits, e.g. `1.0000000000000000e0`.
pub fn format_f64(value: f64) -> String {
    format!("{value:.16e}")
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut out = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut out, RoundTripFormatter(CompactFormatter));
    value.serialize(&mut ser).expect("in-memory serialization");
    let mut s = String::from_utf8(out).expect("JSON is UTF-8");
    s.push('\n');
    s
}
