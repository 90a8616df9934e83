//! Reading diagrams, compositions and elements from files or inline text.

use std::fs;
use std::path::Path;

use parhopf::{parqsym, parsym, AnyElement, Basis, Composition, Diagram, Element, Error, LinComb, QParam, Space};
use serde_json::Value;

use crate::CliError;

/// A parsed `--in` argument.
#[derive(Clone, Debug)]
pub enum Input {
    Element(AnyElement),
    Diagram(Diagram),
    Composition(Composition),
    /// `[]`: the empty diagram or the empty composition, depending on context.
    Empty,
}

/// Reads `arg` as a file if one exists at that path, otherwise as inline text.
pub fn read_input(arg: &str) -> Result<Input, CliError> {
    let path = Path::new(arg);
    let text = if path.is_file() {
        fs::read_to_string(path).map_err(|e| CliError::malformed(format!("{arg}: {e}")))?
    } else {
        arg.to_string()
    };
    parse_input(text.trim()).map_err(CliError::from)
}

pub fn parse_input(text: &str) -> parhopf::Result<Input> {
    match text {
        "dot" => return Ok(Input::Diagram(Diagram::dot())),
        "bar" => return Ok(Input::Diagram(Diagram::bar())),
        "empty" | "∅" => return Ok(Input::Empty),
        _ => {}
    }
    if text.starts_with('(') {
        return text.parse().map(Input::Composition);
    }
    let value: Value = serde_json::from_str(text).map_err(|e| Error::Parse(format!("{e}")))?;
    match &value {
        Value::Object(map) if map.contains_key("terms") => AnyElement::from_json_value(&value).map(Input::Element),
        Value::Object(_) => Diagram::from_json_value(&value).map(Input::Diagram),
        Value::Array(items) if items.is_empty() => Ok(Input::Empty),
        Value::Array(items) if items.iter().all(Value::is_array) => Diagram::from_json_value(&value).map(Input::Diagram),
        Value::Array(items) if items.iter().all(Value::is_u64) => serde_json::from_value(value.clone())
            .map(Input::Composition)
            .map_err(|e| Error::Parse(e.to_string())),
        other => Err(Error::Parse(format!("cannot read {other} as a diagram, composition or element"))),
    }
}

/// Rewrites a diagram element in `basis`, if it is not already there.
pub fn convert_diagram(x: &Element<Diagram>, basis: Basis, q: Option<QParam>) -> parhopf::Result<Element<Diagram>> {
    match x.space {
        Space::ParSym => parsym::convert(x, basis, q),
        _ => parqsym::convert(x, basis, q),
    }
}

/// The input as an element of a diagram space in the given basis.
pub fn diagram_element(input: Input, space: Space, basis: Basis, q: Option<QParam>) -> Result<Element<Diagram>, CliError> {
    let key = match input {
        Input::Element(AnyElement::Diagram(e)) => {
            if e.space != space {
                return Err(CliError::malformed(format!("expected an element of {space}, got {}", e.space)));
            }
            let target = Element::<Diagram>::new(space, basis, q, LinComb::zero())?;
            if e.basis == target.basis && e.q == target.q {
                return Ok(e);
            }
            return Ok(convert_diagram(&e, target.basis, target.q)?);
        }
        Input::Element(AnyElement::Composition(e)) => {
            return Err(CliError::malformed(format!("expected a diagram element, got an element of {}", e.space)))
        }
        Input::Composition(c) => return Err(CliError::malformed(format!("expected a diagram, got the composition {c}"))),
        Input::Diagram(d) => d,
        Input::Empty => Diagram::empty(),
    };
    Ok(Element::basis_element(space, basis, q, key)?)
}

/// The input as an element of a composition space.
pub fn composition_element(input: Input, space: Space) -> Result<Element<Composition>, CliError> {
    let key = match input {
        Input::Element(AnyElement::Composition(e)) => {
            if e.space != space {
                return Err(CliError::malformed(format!("expected an element of {space}, got {}", e.space)));
            }
            return Ok(e);
        }
        Input::Element(AnyElement::Diagram(e)) => {
            return Err(CliError::malformed(format!("expected a composition element, got an element of {}", e.space)))
        }
        Input::Diagram(d) => return Err(CliError::malformed(format!("expected a composition, got the diagram {d}"))),
        Input::Composition(c) => c,
        Input::Empty => Composition::empty(),
    };
    Ok(Element::basis_element(space, Basis::Natural, None, key)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inline_forms() {
        assert!(matches!(parse_input("[[1],[-1]]").unwrap(), Input::Diagram(d) if d == Diagram::dot()));
        assert!(matches!(parse_input(r#"{"order":1,"blocks":[[1,-1]]}"#).unwrap(), Input::Diagram(d) if d == Diagram::bar()));
        assert!(matches!(parse_input("[2,1]").unwrap(), Input::Composition(_)));
        assert!(matches!(parse_input("(2,1)").unwrap(), Input::Composition(_)));
        assert!(matches!(parse_input("[]").unwrap(), Input::Empty));
        assert!(parse_input("[[1]]").is_err());
        assert!(parse_input("nonsense").is_err());
    }
}
