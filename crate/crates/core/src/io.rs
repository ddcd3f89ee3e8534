//! JSON documents for structures, spaces, morphisms and spectra.
//!
//! Documents name elements and points by label. Set-valued output is emitted
//! in ascending bitmask order so equal inputs give byte-identical text.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::bits::{bits, has};
use crate::morphism::{MorphismError, RelMorphism};
use crate::order::{RawStructure, Structure, StructureError};
use crate::relation::BitMatrix;
use crate::space::{FiniteSpace, SpaceError};
use crate::spectrum::SpectrumResult;

/// Value of the `closure` flag that closes the `leq` pair list.
pub const REFLEXIVE_TRANSITIVE: &str = "reflexive-transitive";

#[derive(Debug, thiserror::Error)]
pub enum DocError {
    #[error("cannot read {path}: {message}")]
    Read { path: String, message: String },
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unknown label `{label}` in `{field}`")]
    UnknownLabel { label: String, field: &'static str },
    #[error("unknown closure `{0}`, expected `{REFLEXIVE_TRANSITIVE}`")]
    UnknownClosure(String),
    #[error("invalid structure: {0}")]
    Structure(#[from] StructureError),
    #[error("invalid space: {0}")]
    Space(#[from] SpaceError),
    #[error("invalid morphism: {0}")]
    Morphism(#[from] MorphismError),
    #[error("document is neither a structure (`elements`) nor a space (`points`)")]
    UnknownKind,
}

/// A relation as a boolean matrix or as a list of label pairs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RelationDoc {
    Pairs(Vec<[String; 2]>),
    Matrix(Vec<Vec<bool>>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureDoc {
    pub elements: Vec<String>,
    pub leq: RelationDoc,
    pub prec: RelationDoc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub join: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bottom: Option<String>,
    /// Applies to `leq` only; `prec` is always taken literally.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub closure: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceDoc {
    pub points: Vec<String>,
    pub opens: Vec<Vec<String>>,
    /// Indices into `opens`; absent means every open set.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<usize>>,
}

/// A structure given inline or as a path relative to the referring document.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum StructureRef {
    Path(String),
    Inline(StructureDoc),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismDoc {
    pub source: StructureRef,
    pub target: StructureRef,
    pub pairs: Vec<[String; 2]>,
}

/// A morphism document with both ends resolved and validated.
#[derive(Clone, Debug)]
pub struct LoadedMorphism {
    pub source: Structure,
    pub target: Structure,
    pub morphism: RelMorphism,
}

pub fn read_text(path: &Path) -> Result<String, DocError> {
    std::fs::read_to_string(path).map_err(|e| DocError::Read {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

fn index(labels: &[String], label: &str, field: &'static str) -> Result<usize, DocError> {
    labels.iter().position(|l| l == label).ok_or_else(|| DocError::UnknownLabel {
        label: label.to_string(),
        field,
    })
}

fn relation_matrix(
    labels: &[String],
    rel: &RelationDoc,
    field: &'static str,
) -> Result<Vec<Vec<bool>>, DocError> {
    let n = labels.len();
    match rel {
        RelationDoc::Matrix(m) => Ok(m.clone()),
        RelationDoc::Pairs(pairs) => {
            let mut m = vec![vec![false; n]; n];
            for [p, q] in pairs {
                m[index(labels, p, field)?][index(labels, q, field)?] = true;
            }
            Ok(m)
        }
    }
}

fn reflexive_transitive(m: &mut [Vec<bool>]) {
    let n = m.len();
    for (p, row) in m.iter_mut().enumerate() {
        if p < row.len() {
            row[p] = true;
        }
    }
    for k in 0..n {
        for p in 0..n {
            if m[p].get(k) == Some(&true) {
                for q in 0..n {
                    if m[k].get(q) == Some(&true) {
                        m[p][q] = true;
                    }
                }
            }
        }
    }
}

impl StructureDoc {
    pub fn to_structure(&self) -> Result<Structure, DocError> {
        let labels = &self.elements;
        let mut leq = relation_matrix(labels, &self.leq, "leq")?;
        match self.closure.as_deref() {
            None => {}
            Some(REFLEXIVE_TRANSITIVE) => {
                if matches!(self.leq, RelationDoc::Pairs(_)) {
                    reflexive_transitive(&mut leq);
                }
            }
            Some(other) => return Err(DocError::UnknownClosure(other.to_string())),
        }
        let prec = relation_matrix(labels, &self.prec, "prec")?;
        let join = match &self.join {
            None => None,
            Some(rows) => Some(
                rows.iter()
                    .map(|r| r.iter().map(|l| index(labels, l, "join")).collect())
                    .collect::<Result<Vec<Vec<usize>>, _>>()?,
            ),
        };
        let bottom = match &self.bottom {
            None => None,
            Some(l) => Some(index(labels, l, "bottom")?),
        };
        let raw = RawStructure {
            elements: labels.clone(),
            leq,
            prec,
            join,
            bottom,
        };
        Ok(Structure::validate(&raw)?)
    }

    /// Both relations as literal pair lists in element order.
    pub fn from_structure(s: &Structure) -> StructureDoc {
        let pairs = |f: &dyn Fn(usize, usize) -> bool| {
            RelationDoc::Pairs(
                s.elements()
                    .flat_map(|p| s.elements().map(move |q| (p, q)))
                    .filter(|&(p, q)| f(p, q))
                    .map(|(p, q)| [s.label(p).to_string(), s.label(q).to_string()])
                    .collect(),
            )
        };
        StructureDoc {
            elements: s.labels().to_vec(),
            leq: pairs(&|p, q| s.leq(p, q)),
            prec: pairs(&|p, q| s.prec(p, q)),
            join: None,
            bottom: Some(s.label(s.bottom()).to_string()),
            closure: None,
        }
    }
}

impl SpaceDoc {
    pub fn to_space(&self) -> Result<FiniteSpace, DocError> {
        let opens = self
            .opens
            .iter()
            .map(|o| {
                o.iter()
                    .try_fold(0u32, |acc, l| Ok(acc | 1 << index(&self.points, l, "opens")?))
            })
            .collect::<Result<Vec<u32>, DocError>>()?;
        Ok(FiniteSpace::new(self.points.clone(), opens, self.basis.clone())?)
    }

    /// Opens ascending by mask; the basis is listed only when it is proper.
    pub fn from_space(space: &FiniteSpace) -> SpaceDoc {
        let opens = space.topology().opens();
        let render = |mask: u32| bits(mask).map(|x| space.labels()[x].clone()).collect();
        let basis = (space.basis().len() != opens.len()).then(|| {
            space
                .basis()
                .iter()
                .map(|b| opens.iter().position(|o| o == b).expect("basis members are open"))
                .collect()
        });
        SpaceDoc {
            points: space.labels().to_vec(),
            opens: opens.iter().map(|&o| render(o)).collect(),
            basis,
        }
    }
}

impl StructureRef {
    fn resolve(&self, base: &Path) -> Result<Structure, DocError> {
        match self {
            StructureRef::Inline(doc) => doc.to_structure(),
            StructureRef::Path(p) => {
                let path: PathBuf = base.join(p);
                parse_structure(&read_text(&path)?)
            }
        }
    }
}

impl MorphismDoc {
    /// Resolves path references against `base`, the referring file's directory.
    pub fn load(&self, base: &Path) -> Result<LoadedMorphism, DocError> {
        let source = self.source.resolve(base)?;
        let target = self.target.resolve(base)?;
        let mut m = BitMatrix::empty(source.len(), target.len());
        for [p, q] in &self.pairs {
            m.set(index(source.labels(), p, "pairs")?, index(target.labels(), q, "pairs")?, true);
        }
        let morphism = RelMorphism::new(&source, &target, m)?;
        Ok(LoadedMorphism {
            source,
            target,
            morphism,
        })
    }

    /// Document with both ends inline.
    pub fn from_morphism(m: &RelMorphism, source: &Structure, target: &Structure) -> MorphismDoc {
        MorphismDoc {
            source: StructureRef::Inline(StructureDoc::from_structure(source)),
            target: StructureRef::Inline(StructureDoc::from_structure(target)),
            pairs: m
                .pairs()
                .pairs()
                .map(|(p, q)| [source.label(p).to_string(), target.label(q).to_string()])
                .collect(),
        }
    }
}

pub fn parse_structure(text: &str) -> Result<Structure, DocError> {
    serde_json::from_str::<StructureDoc>(text)?.to_structure()
}

pub fn parse_space(text: &str) -> Result<FiniteSpace, DocError> {
    serde_json::from_str::<SpaceDoc>(text)?.to_space()
}

pub fn load_structure(path: &Path) -> Result<Structure, DocError> {
    parse_structure(&read_text(path)?)
}

pub fn load_space(path: &Path) -> Result<FiniteSpace, DocError> {
    parse_space(&read_text(path)?)
}

pub fn load_morphism(path: &Path) -> Result<LoadedMorphism, DocError> {
    let doc: MorphismDoc = serde_json::from_str(&read_text(path)?)?;
    doc.load(path.parent().unwrap_or(Path::new(".")))
}

/// Either kind of document, told apart by its `elements` or `points` key.
#[derive(Clone, Debug)]
pub enum Document {
    Structure(Structure),
    Space(FiniteSpace),
}

pub fn parse_document(text: &str) -> Result<Document, DocError> {
    let value: Value = serde_json::from_str(text)?;
    let obj = value.as_object().ok_or(DocError::UnknownKind)?;
    if obj.contains_key("elements") {
        Ok(Document::Structure(serde_json::from_value::<StructureDoc>(value)?.to_structure()?))
    } else if obj.contains_key("points") {
        Ok(Document::Space(serde_json::from_value::<SpaceDoc>(value)?.to_space()?))
    } else {
        Err(DocError::UnknownKind)
    }
}

/// `{"points": [[labels]], "basic_opens": {label: [point indices]}}`.
pub fn spectrum_value(s: &Structure, spectrum: &SpectrumResult) -> Value {
    let points: Vec<Value> = spectrum
        .points
        .iter()
        .map(|f| Value::from(f.members().map(|p| s.label(p)).collect::<Vec<_>>()))
        .collect();
    let mut opens = Map::new();
    for p in s.elements() {
        let open = spectrum.basic_opens[p];
        opens.insert(s.label(p).to_string(), Value::from(bits(open).collect::<Vec<_>>()));
    }
    let mut out = Map::new();
    out.insert("points".into(), Value::Array(points));
    out.insert("basic_opens".into(), Value::Object(opens));
    Value::Object(out)
}

/// A partial map between spaces as `{label: label or null}`.
pub fn assignment_value(source: &[String], target: &[String], assignment: &[Option<usize>]) -> Value {
    let mut out = Map::new();
    for (x, y) in assignment.iter().enumerate() {
        out.insert(
            source[x].clone(),
            y.map_or(Value::Null, |y| Value::from(target[y].clone())),
        );
    }
    Value::Object(out)
}

pub fn to_value<T: Serialize>(doc: &T) -> Value {
    serde_json::to_value(doc).expect("documents serialize")
}

/// Indented JSON in which arrays of scalars, and arrays of such arrays, stay
/// on one line. Ends with a newline.
pub fn render_json(value: &Value) -> String {
    let mut out = String::new();
    write_value(value, 0, &mut out);
    out.push('\n');
    out
}

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Array(a) => a.iter().all(|x| !x.is_object() && !x.is_array()),
        Value::Object(_) => false,
        _ => true,
    }
}

fn write_value(v: &Value, depth: usize, out: &mut String) {
    let pad = |d: usize| "  ".repeat(d);
    match v {
        Value::Object(map) if !map.is_empty() => {
            out.push_str("{\n");
            for (i, (k, x)) in map.iter().enumerate() {
                out.push_str(&pad(depth + 1));
                out.push_str(&Value::from(k.as_str()).to_string());
                out.push_str(": ");
                write_value(x, depth + 1, out);
                if i + 1 < map.len() {
                    out.push(',');
                }
                out.push('\n');
            }
            out.push_str(&pad(depth));
            out.push('}');
        }
        Value::Array(a) if !a.iter().all(is_flat) => {
            out.push_str("[\n");
            for (i, x) in a.iter().enumerate() {
                out.push_str(&pad(depth + 1));
                write_value(x, depth + 1, out);
                if i + 1 < a.len() {
                    out.push(',');
                }
                out.push('\n');
            }
            out.push_str(&pad(depth));
            out.push(']');
        }
        Value::Array(a) => {
            out.push('[');
            for (i, x) in a.iter().enumerate() {
                if i > 0 {
                    out.push_str(", ");
                }
                write_value(x, depth, out);
            }
            out.push(']');
        }
        other => out.push_str(&other.to_string()),
    }
}

/// Labels of the members of `mask` within `labels`.
pub fn mask_labels(labels: &[String], mask: u32) -> Vec<String> {
    (0..labels.len()).filter(|&i| has(mask, i)).map(|i| labels[i].clone()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::fixtures;
    use crate::spectrum::enumerate_spectrum;

    #[test]
    fn structure_roundtrip() {
        for s in [fixtures::c3(), fixtures::m3(), fixtures::s2_strict()] {
            let doc = StructureDoc::from_structure(&s);
            let text = render_json(&to_value(&doc));
            assert_eq!(parse_structure(&text).unwrap(), s);
        }
    }

    #[test]
    fn closure_flag_closes_leq_only() {
        let text = r#"{"elements":["0","a","1"],"leq":[["0","a"],["a","1"]],
            "prec":[["0","0"]],"closure":"reflexive-transitive"}"#;
        let s = parse_structure(text).unwrap();
        assert!(s.leq(0, 2));
        assert!(s.prec(0, 0) && !s.prec(1, 1));
        let literal = text.replace(r#","closure":"reflexive-transitive""#, "");
        assert!(matches!(parse_structure(&literal), Err(DocError::Structure(_))));
    }

    #[test]
    fn matrix_form_and_errors() {
        let s = parse_structure(
            r#"{"elements":["0","1"],"leq":[[true,true],[false,true]],"prec":[],"bottom":"0"}"#,
        )
        .unwrap();
        assert_eq!(s.prec_matrix().count(), 0);
        assert!(matches!(parse_structure("{"), Err(DocError::Json(_))));
        let bad = r#"{"elements":["0"],"leq":[["0","z"]],"prec":[]}"#;
        assert!(matches!(parse_structure(bad), Err(DocError::UnknownLabel { .. })));
    }

    #[test]
    fn space_roundtrip_and_kind() {
        let text = r#"{"points":["x","y"],"opens":[[],["y"],["x","y"]]}"#;
        let space = parse_space(text).unwrap();
        let again = render_json(&to_value(&SpaceDoc::from_space(&space)));
        assert_eq!(parse_space(&again).unwrap(), space);
        assert!(matches!(parse_document(text), Ok(Document::Space(_))));
        assert!(matches!(parse_document("{}"), Err(DocError::UnknownKind)));
    }

    #[test]
    fn spectrum_export_of_c3() {
        let s = fixtures::c3();
        let v = spectrum_value(&s, &enumerate_spectrum(&s));
        assert_eq!(
            serde_json::to_string(&v).unwrap(),
            r#"{"points":[["1"],["a","1"]],"basic_opens":{"0":[],"a":[1],"1":[0,1]}}"#
        );
    }

    #[test]
    fn flat_rendering() {
        let v: Value = serde_json::from_str(r#"{"a":[[1,2],[3]],"b":{"c":[]}}"#).unwrap();
        assert_eq!(render_json(&v), "{\n  \"a\": [[1, 2], [3]],\n  \"b\": {\n    \"c\": []\n  }\n}\n");
    }
}
