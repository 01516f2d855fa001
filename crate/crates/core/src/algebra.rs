use std::fmt;

use crate::akivis::AkivisSpec;
use crate::basis::GradedBasis;
use crate::error::Result;
use crate::table::SuperTable;

/// Either a superalgebra given by its product, or an Akivis spec given
/// directly by its bracket and ternary tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Algebra {
    Table(SuperTable),
    Akivis(AkivisSpec),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlgebraKind {
    ProductTable,
    AkivisSpec,
}

impl AlgebraKind {
    pub fn keyword(self) -> &'static str {
        match self {
            AlgebraKind::ProductTable => "product-table",
            AlgebraKind::AkivisSpec => "akivis-spec",
        }
    }
}

impl fmt::Display for AlgebraKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.keyword())
    }
}

impl Algebra {
    pub fn kind(&self) -> AlgebraKind {
        match self {
            Algebra::Table(_) => AlgebraKind::ProductTable,
            Algebra::Akivis(_) => AlgebraKind::AkivisSpec,
        }
    }

    pub fn basis(&self) -> &GradedBasis {
        match self {
            Algebra::Table(t) => t.basis(),
            Algebra::Akivis(s) => s.basis(),
        }
    }

    /// The Akivis structure: `W^A` for a product table, a clone otherwise.
    pub fn to_akivis(&self) -> Result<AkivisSpec> {
        match self {
            Algebra::Table(t) => t.derive_akivis(),
            Algebra::Akivis(s) => Ok(s.clone()),
        }
    }

    pub fn as_table(&self) -> Option<&SuperTable> {
        match self {
            Algebra::Table(t) => Some(t),
            Algebra::Akivis(_) => None,
        }
    }
}

impl From<SuperTable> for Algebra {
    fn from(t: SuperTable) -> Self {
        Algebra::Table(t)
    }
}

impl From<AkivisSpec> for Algebra {
    fn from(s: AkivisSpec) -> Self {
        Algebra::Akivis(s)
    }
}
