//! JSON forms of the library objects. Rationals travel as `"p/q"` strings and
//! matrices as arrays of rows.

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactla::{format_rational, parse_rational, Matrix, Rational, RationalMatrix};
use crate::exterior::{ExteriorOperator, LambdaFamily};
use crate::hinge::{GluedFamily, Hinge, WeakHinge};
use crate::merofam::{ExponentData, Factorization, LaurentMatrix, LaurentPoly};
use crate::relations::LinearRelation;
use crate::reps::{RepOperator, Signature};
use crate::urchin::{CompactificationSpec, ProjectedOperator, UrchinPoint};

/// A type with a JSON representation.
pub trait Wire: Sized {
    type Json: Serialize + DeserializeOwned;

    fn to_wire(&self) -> Self::Json;
    fn from_wire(json: Self::Json) -> Result<Self>;
}

pub fn to_json<T: Wire>(x: &T) -> serde_json::Value {
    serde_json::to_value(x.to_wire()).expect("wire forms always serialize")
}

pub fn to_json_string<T: Wire>(x: &T) -> String {
    serde_json::to_string(&x.to_wire()).expect("wire forms always serialize")
}

pub fn from_json_str<T: Wire>(s: &str) -> Result<T> {
    let json: T::Json = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    T::from_wire(json)
}

pub fn from_json_value<T: Wire>(v: serde_json::Value) -> Result<T> {
    let json: T::Json = serde_json::from_value(v).map_err(|e| Error::Parse(e.to_string()))?;
    T::from_wire(json)
}

pub type MatrixJson = Vec<Vec<String>>;

pub fn matrix_to_json(m: &RationalMatrix) -> MatrixJson {
    m.row_vecs().iter().map(|r| r.iter().map(format_rational).collect()).collect()
}

/// Parses a matrix; `cols` is required when there are no rows.
pub fn matrix_from_json(rows: &[Vec<String>], cols: Option<usize>) -> Result<RationalMatrix> {
    let width =
        rows.first().map(Vec::len).or(cols).ok_or_else(|| Error::Parse("empty matrix of unknown width".into()))?;
    if let Some(c) = cols {
        if c != width {
            return Err(Error::Parse(format!("expected {c} columns, found {width}")));
        }
    }
    let parsed = rows
        .iter()
        .map(|r| {
            if r.len() != width {
                return Err(Error::Parse("ragged matrix rows".into()));
            }
            r.iter().map(|s| parse_rational(s)).collect::<Result<Vec<Rational>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_rows(parsed, width)
}

impl Wire for RationalMatrix {
    type Json = MatrixJson;

    fn to_wire(&self) -> MatrixJson {
        matrix_to_json(self)
    }

    fn from_wire(json: MatrixJson) -> Result<Self> {
        matrix_from_json(&json, None)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RelationJson {
    pub dim_v: usize,
    pub dim_w: usize,
    pub basis: MatrixJson,
}

impl Wire for LinearRelation {
    type Json = RelationJson;

    fn to_wire(&self) -> RelationJson {
        RelationJson { dim_v: self.dim_v(), dim_w: self.dim_w(), basis: matrix_to_json(self.space().basis()) }
    }

    fn from_wire(json: RelationJson) -> Result<Self> {
        let basis = matrix_from_json(&json.basis, Some(json.dim_v + json.dim_w))?;
        LinearRelation::from_vectors(json.dim_v, json.dim_w, &basis.row_vecs())
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct OperatorJson {
    pub k_in: usize,
    pub k_out: usize,
    pub matrix: MatrixJson,
}

impl Wire for ExteriorOperator {
    type Json = OperatorJson;

    fn to_wire(&self) -> OperatorJson {
        OperatorJson { k_in: self.k_in, k_out: self.k_out, matrix: matrix_to_json(&self.matrix) }
    }

    fn from_wire(json: OperatorJson) -> Result<Self> {
        Ok(ExteriorOperator::new(json.k_in, json.k_out, matrix_from_json(&json.matrix, None)?))
    }
}

/// Blocks are indexed by source degree; `null` marks degrees whose target lies
/// outside `0..=dim_w`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LambdaJson {
    pub dim_v: usize,
    pub dim_w: usize,
    pub shift: isize,
    pub blocks: Vec<Option<OperatorJson>>,
}

impl Wire for LambdaFamily {
    type Json = LambdaJson;

    fn to_wire(&self) -> LambdaJson {
        LambdaJson {
            dim_v: self.dim_v,
            dim_w: self.dim_w,
            shift: self.shift,
            blocks: self.blocks.iter().map(|b| b.as_ref().map(Wire::to_wire)).collect(),
        }
    }

    fn from_wire(json: LambdaJson) -> Result<Self> {
        if json.blocks.len() != json.dim_v + 1 {
            return Err(Error::Parse(format!("expected {} blocks", json.dim_v + 1)));
        }
        let blocks = json
            .blocks
            .into_iter()
            .map(|b| b.map(ExteriorOperator::from_wire).transpose())
            .collect::<Result<Vec<_>>>()?;
        Ok(LambdaFamily { dim_v: json.dim_v, dim_w: json.dim_w, shift: json.shift, blocks })
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct HingeJson {
    pub n: usize,
    pub terms: Vec<RelationJson>,
}

fn terms_from_json(json: HingeJson) -> Result<Vec<LinearRelation>> {
    let terms = json.terms.into_iter().map(LinearRelation::from_wire).collect::<Result<Vec<_>>>()?;
    if terms.iter().any(|t| t.dim_v() != json.n) {
        return Err(Error::Parse(format!("hinge terms must be relations on a {}-dimensional space", json.n)));
    }
    Ok(terms)
}

impl Wire for Hinge {
    type Json = HingeJson;

    fn to_wire(&self) -> HingeJson {
        HingeJson { n: self.n(), terms: self.terms().iter().map(Wire::to_wire).collect() }
    }

    fn from_wire(json: HingeJson) -> Result<Self> {
        Hinge::new(terms_from_json(json)?)
    }
}

impl Wire for WeakHinge {
    type Json = HingeJson;

    fn to_wire(&self) -> HingeJson {
        HingeJson { n: self.n(), terms: self.terms().iter().map(Wire::to_wire).collect() }
    }

    fn from_wire(json: HingeJson) -> Result<Self> {
        WeakHinge::new(terms_from_json(json)?)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GluedJson {
    pub blocks: Vec<OperatorJson>,
}

impl Wire for GluedFamily {
    type Json = GluedJson;

    fn to_wire(&self) -> GluedJson {
        GluedJson { blocks: self.blocks().iter().map(Wire::to_wire).collect() }
    }

    fn from_wire(json: GluedJson) -> Result<Self> {
        let blocks = json.blocks.into_iter().map(ExteriorOperator::from_wire).collect::<Result<Vec<_>>>()?;
        let n = blocks.len().checked_sub(1).ok_or(Error::Empty("glued family"))?;
        GluedFamily::new(n, blocks)
    }
}

/// Each entry is a list of `[exponent, "p/q"]` pairs.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LaurentJson {
    pub n: usize,
    pub entries: Vec<Vec<Vec<(i64, String)>>>,
}

impl Wire for LaurentMatrix {
    type Json = LaurentJson;

    fn to_wire(&self) -> LaurentJson {
        let entries = (0..self.rows())
            .map(|i| self.row(i).iter().map(|p| p.terms().map(|(e, c)| (e, format_rational(c))).collect()).collect())
            .collect();
        LaurentJson { n: self.rows(), entries }
    }

    fn from_wire(json: LaurentJson) -> Result<Self> {
        if json.entries.len() != json.n || json.entries.iter().any(|r| r.len() != json.n) {
            return Err(Error::Parse(format!("a Laurent matrix with n = {} needs {0}x{0} entries", json.n)));
        }
        let rows = json
            .entries
            .iter()
            .map(|row| {
                row.iter()
                    .map(|terms| {
                        let parsed =
                            terms.iter().map(|(e, c)| Ok((*e, parse_rational(c)?))).collect::<Result<Vec<_>>>()?;
                        Ok(LaurentPoly::from_terms(parsed))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Matrix::from_rows(rows, json.n)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ExponentJson {
    pub m: Vec<i64>,
    pub k: Vec<i64>,
    pub alpha: Vec<usize>,
}

impl Wire for ExponentData {
    type Json = ExponentJson;

    fn to_wire(&self) -> ExponentJson {
        ExponentJson { m: self.m.clone(), k: self.k.clone(), alpha: self.alpha.clone() }
    }

    fn from_wire(json: ExponentJson) -> Result<Self> {
        let e = ExponentData::from_exponents(json.m)?;
        if e.k != json.k || e.alpha != json.alpha {
            return Err(Error::Parse("k and alpha do not match m".into()));
        }
        Ok(e)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FactorizationJson {
    pub m: Vec<i64>,
    pub precision: i64,
    pub a: LaurentJson,
    pub b: LaurentJson,
}

impl Wire for Factorization {
    type Json = FactorizationJson;

    fn to_wire(&self) -> FactorizationJson {
        FactorizationJson { m: self.m.clone(), precision: self.precision, a: self.a.to_wire(), b: self.b.to_wire() }
    }

    fn from_wire(json: FactorizationJson) -> Result<Self> {
        Ok(Factorization {
            m: json.m,
            precision: json.precision,
            a: LaurentMatrix::from_wire(json.a)?,
            b: LaurentMatrix::from_wire(json.b)?,
        })
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RepOperatorJson {
    pub signature: String,
    pub dim: usize,
    pub matrix: MatrixJson,
}

impl Wire for RepOperator {
    type Json = RepOperatorJson;

    fn to_wire(&self) -> RepOperatorJson {
        RepOperatorJson {
            signature: self.signature.to_string(),
            dim: self.matrix.rows(),
            matrix: matrix_to_json(&self.matrix),
        }
    }

    fn from_wire(json: RepOperatorJson) -> Result<Self> {
        let signature: Signature = json.signature.parse()?;
        let matrix = matrix_from_json(&json.matrix, Some(json.dim))?;
        if matrix.rows() != json.dim {
            return Err(Error::Parse("operator is not square of the stated dimension".into()));
        }
        Ok(RepOperator { signature, matrix })
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum UrchinJson {
    Interior { g: MatrixJson },
    Spike { m: Vec<i64>, hinge: HingeJson },
}

impl Wire for UrchinPoint {
    type Json = UrchinJson;

    fn to_wire(&self) -> UrchinJson {
        match self {
            UrchinPoint::Interior(g) => UrchinJson::Interior { g: matrix_to_json(g) },
            UrchinPoint::Spike { m, hinge } => UrchinJson::Spike { m: m.clone(), hinge: hinge.to_wire() },
        }
    }

    fn from_wire(json: UrchinJson) -> Result<Self> {
        match json {
            UrchinJson::Interior { g } => UrchinPoint::interior(matrix_from_json(&g, None)?),
            UrchinJson::Spike { m, hinge } => UrchinPoint::spike(m, Hinge::from_wire(hinge)?),
        }
    }
}

impl Wire for CompactificationSpec {
    type Json = Vec<String>;

    fn to_wire(&self) -> Vec<String> {
        self.signatures.iter().map(ToString::to_string).collect()
    }

    fn from_wire(json: Vec<String>) -> Result<Self> {
        CompactificationSpec::new(json.iter().map(|s| s.parse()).collect::<Result<Vec<Signature>>>()?)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ProjectedJson {
    pub signatures: Vec<String>,
    pub weights: Vec<i64>,
    pub zeroed: Vec<bool>,
    pub blocks: Vec<MatrixJson>,
}

/// A projected operator together with the signatures of its blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Projection {
    pub spec: CompactificationSpec,
    pub operator: ProjectedOperator,
}

impl Wire for Projection {
    type Json = ProjectedJson;

    fn to_wire(&self) -> ProjectedJson {
        ProjectedJson {
            signatures: self.spec.to_wire(),
            weights: self.operator.weights.clone(),
            zeroed: self.operator.zeroed.clone(),
            blocks: self.operator.blocks.iter().map(matrix_to_json).collect(),
        }
    }

    fn from_wire(json: ProjectedJson) -> Result<Self> {
        let spec = CompactificationSpec::from_wire(json.signatures)?;
        let sigma = spec.signatures.len();
        if json.blocks.len() != sigma || json.weights.len() != sigma || json.zeroed.len() != sigma {
            return Err(Error::Parse("one block, weight and flag per signature".into()));
        }
        let blocks = json.blocks.iter().map(|b| matrix_from_json(b, None)).collect::<Result<Vec<_>>>()?;
        Ok(Projection { spec, operator: ProjectedOperator { blocks, weights: json.weights, zeroed: json.zeroed } })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::ratio;
    use crate::hinge::{glue, OrbitLabel};
    use crate::merofam::diagonal_family;

    fn round_trip<T: Wire + PartialEq + std::fmt::Debug>(x: &T) {
        let s = to_json_string(x);
        assert_eq!(&from_json_str::<T>(&s).unwrap(), x, "{s}");
    }

    #[test]
    fn objects_round_trip() {
        let m = RationalMatrix::from_i64(&[&[1, 2], &[0, 3]]).scale(&ratio(1, 3));
        round_trip(&m);
        let h = Hinge::canonical(&OrbitLabel::new(vec![1, 2]).unwrap());
        round_trip(&h);
        for t in h.terms() {
            round_trip(t);
        }
        round_trip(&glue(&h));
        let g = diagonal_family(&[2, 0, -1]);
        round_trip(&g);
        round_trip(&crate::urchin::curve_limit(&g).unwrap());
        round_trip(&UrchinPoint::Interior(m));
    }

    #[test]
    fn laurent_format() {
        let s = r#"{"n":2,"entries":[[[[0,"1"]],[]],[[],[[1,"1/2"],[-1,"3"]]]]}"#;
        let g: LaurentMatrix = from_json_str(s).unwrap();
        assert_eq!(g[(1, 1)], LaurentPoly::from_terms([(1, ratio(1, 2)), (-1, ratio(3, 1))]));
        let e: ExponentData = crate::merofam::exponents(&g).unwrap();
        assert_eq!(to_json_string(&e), r#"{"m":[1,0],"k":[1,0],"alpha":[1,1]}"#);
    }

    #[test]
    fn bad_input_is_a_parse_error() {
        assert!(matches!(from_json_str::<RationalMatrix>(r#"[["1/0"]]"#), Err(Error::Parse(_))));
        assert!(matches!(from_json_str::<RationalMatrix>(r#"[["1","2"],["3"]]"#), Err(Error::Parse(_))));
        assert!(matches!(from_json_str::<Hinge>("{"), Err(Error::Parse(_))));
    }
}
