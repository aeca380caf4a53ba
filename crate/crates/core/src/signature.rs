//! Global constants: definitions and axioms, in declaration order.

use std::collections::HashMap;

use crate::normalizer::Val;
use crate::syntax::{Name, Sort, TermRef};

#[derive(Clone, Debug)]
pub struct GlobalEntry {
    pub name: Name,
    /// Elaborated type.
    pub ty_term: TermRef,
    pub ty: Val,
    /// Least sort of the type.
    pub sort: Sort,
    /// Elaborated body and its value; `None` for axioms.
    pub body: Option<(TermRef, Val)>,
}

impl GlobalEntry {
    pub fn is_axiom(&self) -> bool {
        self.body.is_none()
    }
}

#[derive(Clone, Debug, Default)]
pub struct Signature {
    entries: HashMap<Name, GlobalEntry>,
    order: Vec<Name>,
}

impl Signature {
    pub fn new() -> Signature {
        Signature::default()
    }

    pub fn get(&self, name: &str) -> Option<&GlobalEntry> {
        self.entries.get(name)
    }

    pub fn contains(&self, name: &str) -> bool {
        self.entries.contains_key(name)
    }

    /// Adds an entry; returns it back if the name is taken.
    pub fn insert(&mut self, entry: GlobalEntry) -> Result<(), GlobalEntry> {
        if self.contains(&entry.name) {
            return Err(entry);
        }
        self.order.push(entry.name.clone());
        self.entries.insert(entry.name.clone(), entry);
        Ok(())
    }

    /// Names in declaration order.
    pub fn names(&self) -> &[Name] {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }
}
