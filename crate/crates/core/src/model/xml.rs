use std::collections::HashSet;
use std::fmt::Write as _;

use quick_xml::escape::escape;
use quick_xml::events::{BytesStart, Event};
use quick_xml::Reader;
use thiserror::Error;

use super::{ClassModel, SourceRef, UmlAttribute, UmlClass, UmlRelationship};

pub const SCHEMA_VERSION: &str = "1.0";

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ModelError {
    #[error("XML syntax error at byte {position}: {message}")]
    XmlSyntaxError { position: u64, message: String },
    #[error("schema violation in <{element}>: {message}")]
    SchemaViolation { element: String, message: String },
    #[error("relationship endpoint `{name}` is not a declared class")]
    DanglingEndpoint { name: String },
}

fn provenance_attr(out: &mut String, refs: &[SourceRef]) {
    if refs.is_empty() {
        return;
    }
    let joined: Vec<String> = refs.iter().map(SourceRef::to_string).collect();
    let _ = write!(out, " provenance=\"{}\"", joined.join(" "));
}

fn attr(out: &mut String, key: &str, value: &str) {
    let _ = write!(out, " {key}=\"{}\"", escape(value));
}

/// Serializes with a UTF-8 declaration and two-space indentation.
pub fn to_xml(m: &ClassModel) -> String {
    let mut out = String::from("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<classModel");
    attr(&mut out, "version", SCHEMA_VERSION);
    for (key, value) in [("source", &m.source), ("mode", &m.mode), ("tool", &m.tool)] {
        if let Some(value) = value {
            attr(&mut out, key, value);
        }
    }
    if m.is_empty() {
        out.push_str("/>\n");
        return out;
    }
    out.push_str(">\n");

    for class in &m.classes {
        out.push_str("  <class");
        attr(&mut out, "name", &class.name);
        provenance_attr(&mut out, &class.provenance);
        if class.attributes.is_empty() {
            out.push_str("/>\n");
            continue;
        }
        out.push_str(">\n");
        for a in &class.attributes {
            out.push_str("    <attribute");
            attr(&mut out, "name", &a.name);
            provenance_attr(&mut out, &a.provenance);
            out.push_str("/>\n");
        }
        out.push_str("  </class>\n");
    }
    for r in &m.relationships {
        out.push_str("  <relationship");
        attr(&mut out, "kind", r.kind.as_str());
        attr(&mut out, "source", &r.source);
        attr(&mut out, "target", &r.target);
        if !r.label.is_empty() {
            attr(&mut out, "label", &r.label);
        }
        provenance_attr(&mut out, &r.provenance);
        out.push_str("/>\n");
    }
    out.push_str("</classModel>\n");
    out
}

fn violation(element: &str, message: impl Into<String>) -> ModelError {
    ModelError::SchemaViolation {
        element: element.to_string(),
        message: message.into(),
    }
}

/// Attribute values of an element, checked against the allowed keys.
struct Attrs {
    element: String,
    values: Vec<(String, String)>,
}

impl Attrs {
    fn read(e: &BytesStart, allowed: &[&str], position: u64) -> Result<Self, ModelError> {
        let element = String::from_utf8_lossy(e.name().as_ref()).into_owned();
        let mut values = Vec::new();
        for a in e.attributes() {
            let a = a.map_err(|err| ModelError::XmlSyntaxError {
                position,
                message: err.to_string(),
            })?;
            let key = String::from_utf8_lossy(a.key.as_ref()).into_owned();
            if !allowed.contains(&key.as_str()) {
                return Err(violation(&element, format!("unexpected attribute `{key}`")));
            }
            let value = a
                .unescape_value()
                .map_err(|err| ModelError::XmlSyntaxError {
                    position,
                    message: err.to_string(),
                })?
                .into_owned();
            values.push((key, value));
        }
        Ok(Self { element, values })
    }

    fn get(&self, key: &str) -> Option<&str> {
        self.values
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    fn required(&self, key: &str) -> Result<String, ModelError> {
        match self.get(key) {
            Some(v) if !v.is_empty() => Ok(v.to_string()),
            _ => Err(violation(&self.element, format!("missing `{key}`"))),
        }
    }

    fn provenance(&self) -> Result<Vec<SourceRef>, ModelError> {
        self.get("provenance")
            .map(|p| {
                p.split_whitespace()
                    .map(|r| r.parse().map_err(|m: String| violation(&self.element, m)))
                    .collect()
            })
            .unwrap_or(Ok(Vec::new()))
    }
}

#[derive(PartialEq)]
enum Open {
    Nothing,
    Root,
    Class,
    Leaf,
}

/// Parses the format written by [`to_xml`]. Provenance attributes are
/// optional.
pub fn from_xml(text: &str) -> Result<ClassModel, ModelError> {
    let mut reader = Reader::from_str(text);
    reader.config_mut().trim_text(true);

    let mut model = ClassModel::default();
    let mut stack: Vec<Open> = vec![Open::Nothing];
    let mut seen_root = false;
    let mut names: HashSet<String> = HashSet::new();

    loop {
        let position = reader.buffer_position();
        let event = reader.read_event().map_err(|err| ModelError::XmlSyntaxError {
            position: reader.error_position(),
            message: err.to_string(),
        })?;
        let (e, is_empty) = match event {
            Event::Start(e) => (e, false),
            Event::Empty(e) => (e, true),
            Event::End(_) => {
                stack.pop();
                continue;
            }
            Event::Text(t) => {
                let raw = String::from_utf8_lossy(&t).trim().to_string();
                if !raw.is_empty() {
                    return Err(violation("classModel", format!("unexpected text `{raw}`")));
                }
                continue;
            }
            Event::CData(_) => return Err(violation("classModel", "unexpected CDATA")),
            Event::Eof => break,
            _ => continue,
        };

        let parent = stack.last().unwrap_or(&Open::Nothing);
        let opened = match (parent, e.name().as_ref()) {
            (Open::Nothing, b"classModel") if !seen_root => {
                seen_root = true;
                let a = Attrs::read(&e, &["version", "source", "mode", "tool"], position)?;
                let version = a.required("version")?;
                if version != super::SCHEMA_VERSION {
                    return Err(violation("classModel", format!("unsupported version {version}")));
                }
                model.source = a.get("source").map(str::to_string);
                model.mode = a.get("mode").map(str::to_string);
                model.tool = a.get("tool").map(str::to_string);
                Open::Root
            }
            (Open::Root, b"class") => {
                let a = Attrs::read(&e, &["name", "provenance"], position)?;
                let name = a.required("name")?;
                if !names.insert(name.clone()) {
                    return Err(violation("class", format!("duplicate class `{name}`")));
                }
                model.classes.push(UmlClass {
                    name,
                    attributes: Vec::new(),
                    provenance: a.provenance()?,
                });
                Open::Class
            }
            (Open::Class, b"attribute") => {
                let a = Attrs::read(&e, &["name", "provenance"], position)?;
                let name = a.required("name")?;
                let class = model.classes.last_mut().expect("open class");
                if class.attributes.iter().any(|x| x.name == name) {
                    return Err(violation("attribute", format!("duplicate attribute `{name}`")));
                }
                class.attributes.push(UmlAttribute {
                    name,
                    provenance: a.provenance()?,
                });
                Open::Leaf
            }
            (Open::Root, b"relationship") => {
                let a = Attrs::read(
                    &e,
                    &["kind", "source", "target", "label", "provenance"],
                    position,
                )?;
                let kind = a
                    .required("kind")?
                    .parse()
                    .map_err(|m: String| violation("relationship", m))?;
                model.relationships.push(UmlRelationship {
                    kind,
                    source: a.required("source")?,
                    target: a.required("target")?,
                    label: a.get("label").unwrap_or("").to_string(),
                    provenance: a.provenance()?,
                });
                Open::Leaf
            }
            (_, name) => {
                let name = String::from_utf8_lossy(name).into_owned();
                return Err(violation(&name, "unexpected element"));
            }
        };
        if !is_empty {
            stack.push(opened);
        }
    }

    if !seen_root {
        return Err(violation("classModel", "missing root element"));
    }
    if let Some(name) = model.dangling_endpoint() {
        return Err(ModelError::DanglingEndpoint {
            name: name.to_string(),
        });
    }
    Ok(model)
}
