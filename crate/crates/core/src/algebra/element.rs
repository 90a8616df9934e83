//! Tagged elements: a linear combination together with the space, basis and `q` it lives in.

use std::fmt;
use std::str::FromStr;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::lincomb::LinComb;
use super::scalar::{format_scalar, parse_scalar, QParam, Scalar};
use crate::composition::Composition;
use crate::diagram::Diagram;
use crate::error::{Error, Result};

/// Keys of a graded basis.
pub trait BasisKey: Ord + Clone + fmt::Debug + Serialize + DeserializeOwned {
    const DIAGRAM: bool;

    fn grade(&self) -> usize;
}

impl BasisKey for Diagram {
    const DIAGRAM: bool = true;

    fn grade(&self) -> usize {
        self.order()
    }
}

impl BasisKey for Composition {
    const DIAGRAM: bool = false;

    fn grade(&self) -> usize {
        self.size()
    }
}

impl<A: BasisKey, B: BasisKey> BasisKey for (A, B) {
    const DIAGRAM: bool = A::DIAGRAM;

    fn grade(&self) -> usize {
        self.0.grade() + self.1.grade()
    }
}

impl<A: BasisKey, B: BasisKey, C: BasisKey> BasisKey for (A, B, C) {
    const DIAGRAM: bool = A::DIAGRAM;

    fn grade(&self) -> usize {
        self.0.grade() + self.1.grade() + self.2.grade()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Space {
    ParSym,
    ParQSym,
    QSym,
    NSym,
    Sh,
}

impl Space {
    pub fn uses_diagrams(self) -> bool {
        matches!(self, Space::ParSym | Space::ParQSym)
    }

    pub fn name(self) -> &'static str {
        match self {
            Space::ParSym => "parsym",
            Space::ParQSym => "parqsym",
            Space::QSym => "qsym",
            Space::NSym => "nsym",
            Space::Sh => "sh",
        }
    }

    pub fn allows(self, basis: Basis) -> bool {
        use Basis::*;
        match self {
            Space::ParSym => matches!(basis, H | R | KQ),
            Space::ParQSym => matches!(basis, M | L | ETA | ETAQ),
            Space::QSym | Space::NSym | Space::Sh => basis == Natural,
        }
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Space {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "parsym" => Ok(Space::ParSym),
            "parqsym" => Ok(Space::ParQSym),
            "qsym" => Ok(Space::QSym),
            "nsym" => Ok(Space::NSym),
            "sh" => Ok(Space::Sh),
            _ => Err(Error::Parse(format!("unknown space {s:?}"))),
        }
    }
}

#[allow(clippy::upper_case_acronyms)]
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Basis {
    H,
    R,
    KQ,
    M,
    L,
    ETA,
    ETAQ,
    #[serde(rename = "natural")]
    Natural,
}

impl Basis {
    pub fn name(self) -> &'static str {
        match self {
            Basis::H => "H",
            Basis::R => "R",
            Basis::KQ => "KQ",
            Basis::M => "M",
            Basis::L => "L",
            Basis::ETA => "ETA",
            Basis::ETAQ => "ETAQ",
            Basis::Natural => "natural",
        }
    }

    pub fn needs_q(self) -> bool {
        matches!(self, Basis::KQ | Basis::ETAQ)
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Basis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "H" | "h" => Ok(Basis::H),
            "R" | "r" => Ok(Basis::R),
            "KQ" | "kq" | "kappa" => Ok(Basis::KQ),
            "M" | "m" => Ok(Basis::M),
            "L" | "l" => Ok(Basis::L),
            "ETA" | "eta" => Ok(Basis::ETA),
            "ETAQ" | "etaq" => Ok(Basis::ETAQ),
            "natural" | "x" => Ok(Basis::Natural),
            _ => Err(Error::Parse(format!("unknown basis {s:?}"))),
        }
    }
}

/// Resolves the basis/`q` pair: `ETA` becomes `ETAQ` at `q = 1`, `q` is dropped where unused.
pub fn normalize_meta(space: Space, basis: Basis, q: Option<QParam>) -> Result<(Basis, Option<QParam>)> {
    let (basis, q) = match (space, basis) {
        (Space::QSym, Basis::M) | (Space::NSym, Basis::H) => (Basis::Natural, None),
        (_, Basis::ETA) => {
            if let Some(q) = &q {
                if !q.is_one() {
                    return Err(Error::MetadataMismatch(format!("basis ETA has q = 1, got {q}")));
                }
            }
            (Basis::ETAQ, Some(QParam::one()))
        }
        (_, b) if b.needs_q() => match q {
            Some(q) => (b, Some(q)),
            None => return Err(Error::MissingQ(b.to_string())),
        },
        (_, b) => (b, None),
    };
    if !space.allows(basis) {
        return Err(Error::IllegalBasis { space: space.to_string(), basis: basis.to_string() });
    }
    Ok((basis, q))
}

#[derive(Clone, PartialEq, Eq)]
pub struct Element<K: Ord> {
    pub space: Space,
    pub basis: Basis,
    pub q: Option<QParam>,
    pub terms: LinComb<K>,
}

impl<K: Ord> Element<K> {
    fn meta_string(&self) -> String {
        match &self.q {
            Some(q) => format!("{}/{}(q={})", self.space, self.basis, q),
            None => format!("{}/{}", self.space, self.basis),
        }
    }
}

pub type Tensor2<K> = Element<(K, K)>;
pub type Tensor3<K> = Element<(K, K, K)>;

impl<K: BasisKey> Element<K> {
    pub fn new(space: Space, basis: Basis, q: Option<QParam>, terms: LinComb<K>) -> Result<Self> {
        if K::DIAGRAM != space.uses_diagrams() {
            return Err(Error::MetadataMismatch(format!("wrong key type for space {space}")));
        }
        let (basis, q) = normalize_meta(space, basis, q)?;
        Ok(Element { space, basis, q, terms })
    }

    pub fn basis_element(space: Space, basis: Basis, q: Option<QParam>, key: K) -> Result<Self> {
        Element::new(space, basis, q, LinComb::basis(key))
    }

    /// Same metadata, new terms.
    pub fn with_terms<K2: Ord>(&self, terms: LinComb<K2>) -> Element<K2> {
        Element { space: self.space, basis: self.basis, q: self.q.clone(), terms }
    }

    pub fn same_meta<K2: Ord>(&self, other: &Element<K2>) -> Result<()> {
        if self.space != other.space || self.basis != other.basis || self.q != other.q {
            return Err(Error::MetadataMismatch(format!(
                "{} vs {}",
                self.meta_string(),
                other.meta_string()
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Element<K>) -> Result<Self> {
        self.same_meta(other)?;
        Ok(self.with_terms(&self.terms + &other.terms))
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        self.with_terms(self.terms.scale(c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    /// Terms ordered by `(grade, canonical text)`.
    pub fn sorted_terms(&self) -> Vec<(&K, &Scalar)> {
        let mut terms: Vec<(usize, String, &K, &Scalar)> = self
            .terms
            .iter()
            .map(|(k, c)| (k.grade(), serde_json::to_string(k).unwrap_or_default(), k, c))
            .collect();
        terms.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
        terms.into_iter().map(|(_, _, k, c)| (k, c)).collect()
    }

    pub fn to_json_value(&self) -> Value {
        let terms: Vec<Value> = self
            .sorted_terms()
            .into_iter()
            .map(|(k, c)| json!({"coeff": format_scalar(c), "key": k}))
            .collect();
        let mut obj = serde_json::Map::new();
        obj.insert("space".into(), json!(self.space));
        obj.insert("basis".into(), json!(self.basis));
        if let Some(q) = &self.q {
            obj.insert("q".into(), json!(q));
        }
        obj.insert("terms".into(), Value::Array(terms));
        Value::Object(obj)
    }

    pub fn from_json_value(value: &Value) -> Result<Self> {
        let (space, basis, q) = read_meta(value)?;
        let raw = value
            .get("terms")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("element needs a \"terms\" array".into()))?;
        let mut terms = LinComb::zero();
        for t in raw {
            let coeff = match t.get("coeff") {
                Some(Value::String(s)) => parse_scalar(s)?,
                Some(Value::Number(n)) => parse_scalar(&n.to_string())?,
                _ => return Err(Error::Parse("term needs a coeff".into())),
            };
            let key: K = serde_json::from_value(
                t.get("key").cloned().ok_or_else(|| Error::Parse("term needs a key".into()))?,
            )
            .map_err(|e| Error::Parse(format!("term key: {e}")))?;
            terms.add_term(key, coeff);
        }
        Element::new(space, basis, q, terms)
    }

}

/// Reads `space`, `basis` and optional `q` from an element document.
pub fn read_meta(value: &Value) -> Result<(Space, Basis, Option<QParam>)> {
    let field = |name: &str| -> Result<&str> {
        value
            .get(name)
            .and_then(Value::as_str)
            .ok_or_else(|| Error::Parse(format!("element needs a string field {name:?}")))
    };
    let space: Space = field("space")?.parse()?;
    let basis: Basis = field("basis")?.parse()?;
    let q = match value.get("q") {
        None | Some(Value::Null) => None,
        Some(Value::String(s)) => Some(s.parse()?),
        Some(Value::Number(n)) => Some(n.to_string().parse()?),
        Some(other) => return Err(Error::Parse(format!("invalid q {other}"))),
    };
    Ok((space, basis, q))
}

impl<K: BasisKey> fmt::Debug for Element<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{:?}]", self.meta_string(), self.terms)
    }
}

/// An element whose key type is decided at run time by its space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyElement {
    Diagram(Element<Diagram>),
    Composition(Element<Composition>),
}

impl AnyElement {
    pub fn from_json_value(value: &Value) -> Result<Self> {
        let (space, _, _) = read_meta(value)?;
        if space.uses_diagrams() {
            Element::from_json_value(value).map(AnyElement::Diagram)
        } else {
            Element::from_json_value(value).map(AnyElement::Composition)
        }
    }

    pub fn to_json_value(&self) -> Value {
        match self {
            AnyElement::Diagram(e) => e.to_json_value(),
            AnyElement::Composition(e) => e.to_json_value(),
        }
    }

    pub fn space(&self) -> Space {
        match self {
            AnyElement::Diagram(e) => e.space,
            AnyElement::Composition(e) => e.space,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::int;

    fn m(d: Diagram) -> Element<Diagram> {
        Element::basis_element(Space::ParQSym, Basis::M, None, d).unwrap()
    }

    #[test]
    fn add_and_scale() {
        let x = m(Diagram::dot());
        assert_eq!(x.add(&x).unwrap().terms.coeff(&Diagram::dot()), int(2));
        assert!(x.scale(&int(0)).is_zero());
        assert!(x.add(&x.scale(&int(-1))).unwrap().is_zero());
    }

    #[test]
    fn metadata_checks() {
        let x = m(Diagram::dot());
        let h = Element::basis_element(Space::ParSym, Basis::H, None, Diagram::dot()).unwrap();
        assert!(matches!(x.add(&h.with_terms(x.terms.clone())), Err(Error::MetadataMismatch(_))));
        assert!(matches!(
            Element::basis_element(Space::ParSym, Basis::M, None, Diagram::dot()),
            Err(Error::IllegalBasis { .. })
        ));
        assert_eq!(
            Element::basis_element(Space::ParSym, Basis::KQ, None, Diagram::dot()),
            Err(Error::MissingQ("KQ".into()))
        );
        let eta = Element::basis_element(Space::ParQSym, Basis::ETA, None, Diagram::dot()).unwrap();
        assert_eq!(eta.basis, Basis::ETAQ);
        assert_eq!(eta.q, Some(QParam::one()));
    }

    #[test]
    fn json_round_trip() {
        let dot = Diagram::dot();
        let bar = Diagram::bar();
        let mut terms = LinComb::term(dot.tensor(&bar), int(2));
        terms.add_term(Diagram::empty(), int(-1));
        let x = Element::new(Space::ParSym, Basis::KQ, Some("1/2".parse().unwrap()), terms).unwrap();
        let v = x.to_json_value();
        assert_eq!(v["q"], "1/2");
        assert_eq!(v["terms"][0]["coeff"], "-1");
        assert_eq!(Element::<Diagram>::from_json_value(&v).unwrap(), x);
        let any = AnyElement::from_json_value(&v).unwrap();
        assert_eq!(any.to_json_value(), v);
    }

    #[test]
    fn composition_elements() {
        let x = Element::basis_element(Space::QSym, Basis::M, None, Composition::new(vec![2, 1]).unwrap())
            .unwrap();
        assert_eq!(x.basis, Basis::Natural);
        let v = x.to_json_value();
        assert_eq!(v["terms"][0]["key"], json!([2, 1]));
        assert_eq!(AnyElement::from_json_value(&v).unwrap(), AnyElement::Composition(x));
    }
}
