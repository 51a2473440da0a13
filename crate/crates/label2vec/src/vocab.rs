//! Bidirectional mapping between label names and dense integer ids.

use std::collections::HashMap;

use crate::error::{Error, Result};

/// Label vocabulary. Ids are dense, contiguous and assigned in
/// first-appearance order over whatever stream fed the vocabulary.
#[derive(Debug, Clone, Default)]
pub struct LabelVocab {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

impl LabelVocab {
    pub fn new() -> Self {
        Self::default()
    }

    /// Number of labels L.
    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    /// Returns the id for `name`, inserting it at the next free id if unseen.
    pub fn intern(&mut self, name: &str) -> usize {
        if let Some(&id) = self.index.get(name) {
            return id;
        }
        let id = self.names.len();
        self.names.push(name.to_owned());
        self.index.insert(name.to_owned(), id);
        id
    }

    pub fn id(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    /// Like [`id`](Self::id) but produces an `UnknownLabel` error.
    pub fn require(&self, name: &str) -> Result<usize> {
        self.id(name).ok_or_else(|| Error::UnknownLabel(name.into()))
    }

    pub fn name(&self, id: usize) -> Option<&str> {
        self.names.get(id).map(|s| s.as_str())
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }
}
