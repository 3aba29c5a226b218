//! Formal variables. Names are interned for the life of the process and
//! ordered by name, so canonical forms do not depend on creation order.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VarKind {
    /// Parameters such as q, s, z that appear with negative powers.
    Multiplicative,
    /// Spectral parameters such as u, v that get shifted.
    Additive,
}

#[derive(Clone, Copy)]
pub struct Var(&'static str);

fn registry() -> &'static Mutex<HashMap<&'static str, VarKind>> {
    static REG: OnceLock<Mutex<HashMap<&'static str, VarKind>>> = OnceLock::new();
    REG.get_or_init(|| Mutex::new(HashMap::new()))
}

fn default_kind(name: &str) -> VarKind {
    match name.chars().next() {
        Some('u') | Some('v') | Some('a') | Some('b') => VarKind::Additive,
        _ => VarKind::Multiplicative,
    }
}

impl Var {
    /// Interns `name` with its default kind (u, v, a, b are additive).
    pub fn new(name: &str) -> Var {
        Self::with_kind(name, default_kind(name)).expect("default kind is always consistent")
    }

    /// Interns `name`; fails if it was already created with another kind.
    pub fn with_kind(name: &str, kind: VarKind) -> Result<Var, String> {
        let mut reg = registry().lock().expect("variable registry poisoned");
        if let Some((&k, &existing)) = reg.get_key_value(name) {
            if existing != kind {
                return Err(format!("variable '{name}' already declared as {existing:?}"));
            }
            return Ok(Var(k));
        }
        let leaked: &'static str = Box::leak(name.to_string().into_boxed_str());
        reg.insert(leaked, kind);
        Ok(Var(leaked))
    }

    pub fn name(&self) -> &'static str {
        self.0
    }

    pub fn kind(&self) -> VarKind {
        let reg = registry().lock().expect("variable registry poisoned");
        reg.get(self.0).copied().unwrap_or(VarKind::Multiplicative)
    }
}

impl PartialEq for Var {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.0, other.0) || self.0 == other.0
    }
}

impl Eq for Var {}

impl std::hash::Hash for Var {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.0.hash(state)
    }
}

impl PartialOrd for Var {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Var {
    fn cmp(&self, other: &Self) -> Ordering {
        if std::ptr::eq(self.0, other.0) {
            Ordering::Equal
        } else {
            self.0.cmp(other.0)
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.0)
    }
}

impl fmt::Debug for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interning_and_order() {
        let q = Var::new("q");
        let z = Var::new("z");
        assert_eq!(q, Var::new("q"));
        assert!(q < z);
        assert_eq!(Var::new("u").kind(), VarKind::Additive);
        assert!(Var::with_kind("q", VarKind::Additive).is_err());
    }
}
