use std::fmt::Write as _;

use super::ClassModel;
use crate::rules::RelationKind;

/// PlantUML class diagram text.
pub fn to_plantuml(m: &ClassModel) -> String {
    let mut out = String::from("@startuml\n");
    for class in &m.classes {
        let _ = writeln!(out, "class {} {{", class.name);
        for a in &class.attributes {
            let _ = writeln!(out, "  {}", a.name);
        }
        out.push_str("}\n");
    }
    for r in &m.relationships {
        let arrow = match r.kind {
            RelationKind::Association => "-->",
            RelationKind::Aggregation => "o--",
            RelationKind::Generalization => "--|>",
        };
        let _ = write!(out, "{} {arrow} {}", r.source, r.target);
        if !r.label.is_empty() {
            let _ = write!(out, " : {}", r.label);
        }
        out.push('\n');
    }
    out.push_str("@enduml\n");
    out
}
