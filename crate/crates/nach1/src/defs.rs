//! JSON definition files for groups, modules, and short exact sequences.

use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::gmodule::{GModule, GModuleHom};
use crate::group::{FiniteGroup, GroupHom};
use crate::sequences::ShortExactSequence;
use crate::{Error, Result};

/// Default order cap when building groups from definition files.
pub const DEFAULT_MAX_ORDER: usize = 20_160;

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct GroupDef {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub table: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<Vec<usize>>>,
}

impl GroupDef {
    pub fn build(&self, max_order: usize) -> Result<Arc<FiniteGroup>> {
        let name = self.name.as_deref();
        match (&self.table, &self.degree, &self.generators) {
            (Some(table), None, None) => {
                if let Some(kind) = &self.kind {
                    if kind != "table" {
                        return Err(Error::InvalidDefinition(format!(
                            "kind \"{kind}\" does not match a table definition"
                        )));
                    }
                }
                if table.len() > max_order {
                    return Err(Error::SizeLimitExceeded(format!(
                        "table of order {} exceeds --max-order {max_order}",
                        table.len()
                    )));
                }
                FiniteGroup::from_table(table, name)
            }
            (None, Some(degree), Some(generators)) => {
                if let Some(kind) = &self.kind {
                    if kind != "perm" {
                        return Err(Error::InvalidDefinition(format!(
                            "kind \"{kind}\" does not match a permutation definition"
                        )));
                    }
                }
                FiniteGroup::from_permutations(*degree, generators, name, max_order)
            }
            _ => Err(Error::InvalidDefinition(
                "exactly one of \"table\" or \"degree\"+\"generators\" must be present".into(),
            )),
        }
    }
}

/// A group given inline or as a path to another definition file.
#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(untagged)]
pub enum GroupRef {
    Path(String),
    Inline(GroupDef),
}

impl GroupRef {
    /// `base` is the directory of the referencing file; `None` forbids
    /// path references entirely (used when parsing untrusted bytes).
    pub fn build(&self, base: Option<&Path>, max_order: usize) -> Result<Arc<FiniteGroup>> {
        match self {
            GroupRef::Inline(def) => def.build(max_order),
            GroupRef::Path(rel) => {
                let base = base.ok_or_else(|| {
                    Error::InvalidDefinition("file references are not allowed here".into())
                })?;
                let text = std::fs::read_to_string(base.join(rel))?;
                let def: GroupDef = serde_json::from_str(&text)?;
                def.build(max_order)
            }
        }
    }
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(untagged)]
pub enum ActionDef {
    Named(String),
    Table(Vec<Vec<usize>>),
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleDef {
    pub group: GroupRef,
    pub coefficients: GroupRef,
    pub action: ActionDef,
}

impl ModuleDef {
    pub fn build(&self, base: Option<&Path>, max_order: usize) -> Result<GModule> {
        let group = self.group.build(base, max_order)?;
        let coeff = self.coefficients.build(base, max_order)?;
        match &self.action {
            ActionDef::Named(name) if name == "trivial" => Ok(GModule::trivial(&group, &coeff)),
            ActionDef::Named(name) if name == "conjugation" => {
                if group != coeff {
                    return Err(Error::InvalidDefinition(
                        "\"conjugation\" requires group and coefficients to coincide".into(),
                    ));
                }
                Ok(GModule::conjugation(&group))
            }
            ActionDef::Named(name) => Err(Error::InvalidDefinition(format!(
                "unknown action \"{name}\" (expected \"trivial\", \"conjugation\", or a table)"
            ))),
            ActionDef::Table(rows) => {
                if rows.len() != group.order() {
                    return Err(Error::InvalidDefinition(format!(
                        "action table has {} rows, expected {}",
                        rows.len(),
                        group.order()
                    )));
                }
                let mut act = Vec::with_capacity(group.order() * coeff.order());
                for row in rows {
                    if row.len() != coeff.order() {
                        return Err(Error::InvalidDefinition(format!(
                            "action row has {} entries, expected {}",
                            row.len(),
                            coeff.order()
                        )));
                    }
                    act.extend_from_slice(row);
                }
                GModule::new(&group, &coeff, act)
            }
        }
    }
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(untagged)]
pub enum ModuleRef {
    Path(String),
    Inline(ModuleDef),
}

impl ModuleRef {
    pub fn build(&self, base: Option<&Path>, max_order: usize) -> Result<GModule> {
        match self {
            ModuleRef::Inline(def) => def.build(base, max_order),
            ModuleRef::Path(rel) => {
                let base = base.ok_or_else(|| {
                    Error::InvalidDefinition("file references are not allowed here".into())
                })?;
                let path = base.join(rel);
                let text = std::fs::read_to_string(&path)?;
                let def: ModuleDef = serde_json::from_str(&text)?;
                def.build(path.parent(), max_order)
            }
        }
    }
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct SequenceDef {
    #[serde(rename = "module_A")]
    pub module_a: ModuleRef,
    #[serde(rename = "module_B")]
    pub module_b: ModuleRef,
    #[serde(rename = "module_C")]
    pub module_c: ModuleRef,
    pub iota: Vec<usize>,
    pub pi: Vec<usize>,
}

impl SequenceDef {
    pub fn build(&self, base: Option<&Path>, max_order: usize) -> Result<ShortExactSequence> {
        let m_a = self.module_a.build(base, max_order)?;
        let m_b = self.module_b.build(base, max_order)?;
        let m_c = self.module_c.build(base, max_order)?;
        let iota_hom = GroupHom::new(m_a.coeff(), m_b.coeff(), self.iota.clone())?;
        let pi_hom = GroupHom::new(m_b.coeff(), m_c.coeff(), self.pi.clone())?;
        let iota = GModuleHom::new(&m_a, &m_b, iota_hom)?;
        let pi = GModuleHom::new(&m_b, &m_c, pi_hom)?;
        ShortExactSequence::new(iota, pi)
    }
}

/// Any of the three definition kinds, auto-detected by field shape.
#[derive(Clone, Debug)]
pub enum AnyDef {
    Group(GroupDef),
    Module(ModuleDef),
    Sequence(SequenceDef),
}

pub fn parse_any(text: &str) -> Result<AnyDef> {
    let value: serde_json::Value = serde_json::from_str(text)?;
    let obj = value.as_object().ok_or_else(|| {
        Error::InvalidDefinition("definition file must be a JSON object".into())
    })?;
    if obj.contains_key("module_A") {
        Ok(AnyDef::Sequence(serde_json::from_value(value)?))
    } else if obj.contains_key("action") {
        Ok(AnyDef::Module(serde_json::from_value(value)?))
    } else {
        Ok(AnyDef::Group(serde_json::from_value(value)?))
    }
}

pub fn load_group(path: &Path, max_order: usize) -> Result<Arc<FiniteGroup>> {
    let text = std::fs::read_to_string(path)?;
    let def: GroupDef = serde_json::from_str(&text)?;
    def.build(max_order)
}

pub fn load_module(path: &Path, max_order: usize) -> Result<GModule> {
    let text = std::fs::read_to_string(path)?;
    let def: ModuleDef = serde_json::from_str(&text)?;
    def.build(path.parent(), max_order)
}

pub fn load_sequence(path: &Path, max_order: usize) -> Result<ShortExactSequence> {
    let text = std::fs::read_to_string(path)?;
    let def: SequenceDef = serde_json::from_str(&text)?;
    def.build(path.parent(), max_order)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_group_roundtrip() {
        let text = r#"{"name": "C3", "kind": "table", "table": [[0,1,2],[1,2,0],[2,0,1]]}"#;
        let def: GroupDef = serde_json::from_str(text).unwrap();
        let g = def.build(DEFAULT_MAX_ORDER).unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.label(), Some("C3"));
    }

    #[test]
    fn perm_group_definition() {
        let text = r#"{"name": "S3", "kind": "perm", "degree": 3,
                       "generators": [[1,0,2],[1,2,0]]}"#;
        let def: GroupDef = serde_json::from_str(text).unwrap();
        assert_eq!(def.build(DEFAULT_MAX_ORDER).unwrap().order(), 6);
    }

    #[test]
    fn rejects_mixed_or_missing_shape() {
        for text in [
            r#"{"table": [[0]], "degree": 1, "generators": [[0]]}"#,
            r#"{"name": "empty"}"#,
            r#"{"kind": "perm", "table": [[0]]}"#,
        ] {
            let def: GroupDef = serde_json::from_str(text).unwrap();
            assert!(def.build(DEFAULT_MAX_ORDER).is_err(), "{text}");
        }
        assert!(serde_json::from_str::<GroupDef>(r#"{"tabel": [[0]]}"#).is_err());
    }

    #[test]
    fn max_order_is_enforced() {
        let def: GroupDef = serde_json::from_str(
            r#"{"kind": "perm", "degree": 4, "generators": [[1,0,2,3],[1,2,3,0]]}"#,
        )
        .unwrap();
        assert!(def.build(24).is_ok());
        assert!(matches!(def.build(23), Err(Error::SizeLimitExceeded(_))));
    }

    #[test]
    fn module_with_inline_parts() {
        let text = r#"{
            "group": {"table": [[0,1],[1,0]]},
            "coefficients": {"table": [[0,1,2],[1,2,0],[2,0,1]]},
            "action": [[0,1,2],[0,2,1]]
        }"#;
        let def: ModuleDef = serde_json::from_str(text).unwrap();
        let m = def.build(None, DEFAULT_MAX_ORDER).unwrap();
        assert_eq!(m.act(1, 1), 2);
    }

    #[test]
    fn named_actions() {
        let text = r#"{
            "group": {"table": [[0,1],[1,0]]},
            "coefficients": {"table": [[0,1],[1,0]]},
            "action": "trivial"
        }"#;
        let def: ModuleDef = serde_json::from_str(text).unwrap();
        assert!(def.build(None, DEFAULT_MAX_ORDER).is_ok());

        let text = r#"{
            "group": {"table": [[0,1],[1,0]]},
            "coefficients": {"table": [[0,1,2],[1,2,0],[2,0,1]]},
            "action": "conjugation"
        }"#;
        let def: ModuleDef = serde_json::from_str(text).unwrap();
        assert!(matches!(
            def.build(None, DEFAULT_MAX_ORDER),
            Err(Error::InvalidDefinition(_))
        ));
    }

    #[test]
    fn path_refs_resolve_relative_to_file() {
        let dir = tempfile::tempdir().unwrap();
        std::fs::write(
            dir.path().join("c2.json"),
            r#"{"name": "C2", "table": [[0,1],[1,0]]}"#,
        )
        .unwrap();
        std::fs::write(
            dir.path().join("mod.json"),
            r#"{"group": "c2.json", "coefficients": "c2.json", "action": "trivial"}"#,
        )
        .unwrap();
        let m = load_module(&dir.path().join("mod.json"), DEFAULT_MAX_ORDER).unwrap();
        assert_eq!(m.group().order(), 2);
    }

    #[test]
    fn path_refs_forbidden_without_base() {
        let def: ModuleDef = serde_json::from_str(
            r#"{"group": "c2.json", "coefficients": "c2.json", "action": "trivial"}"#,
        )
        .unwrap();
        assert!(matches!(def.build(None, DEFAULT_MAX_ORDER), Err(Error::InvalidDefinition(_))));
    }

    #[test]
    fn sequence_definition_builds() {
        let text = r#"{
            "module_A": {"group": {"table": [[0,1],[1,0]]},
                         "coefficients": {"name": "C2", "table": [[0,1],[1,0]]},
                         "action": "trivial"},
            "module_B": {"group": {"table": [[0,1],[1,0]]},
                         "coefficients": {"name": "C4", "table": [[0,1,2,3],[1,2,3,0],[2,3,0,1],[3,0,1,2]]},
                         "action": "trivial"},
            "module_C": {"group": {"table": [[0,1],[1,0]]},
                         "coefficients": {"name": "C2", "table": [[0,1],[1,0]]},
                         "action": "trivial"},
            "iota": [0, 2],
            "pi": [0, 1, 0, 1]
        }"#;
        let def: SequenceDef = serde_json::from_str(text).unwrap();
        let ses = def.build(None, DEFAULT_MAX_ORDER).unwrap();
        assert!(ses.central());
    }

    #[test]
    fn parse_any_detects_kind() {
        assert!(matches!(parse_any(r#"{"table": [[0]]}"#).unwrap(), AnyDef::Group(_)));
        assert!(matches!(
            parse_any(r#"{"group": "g.json", "coefficients": "g.json", "action": "trivial"}"#)
                .unwrap(),
            AnyDef::Module(_)
        ));
        assert!(parse_any("[1,2,3]").is_err());
    }
}
