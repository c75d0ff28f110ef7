//! Images of the Chevalley–Weyl generators in `𝕎_n ⊗ End V`.
//!
//! For a generator `g` the product `g·u_1^{a_1} … u_n^{a_n}` is reduced, each
//! reduced term `p(a) u_1^{a_1-b_1} … u_n^{a_n-b_n} f` is grouped by its
//! trailing factor `f` (a generator outside `𝔫₋`, or nothing), the `(p, b)`
//! data of each group is turned into a Weyl operator, and the group
//! contributes that operator tensored with the action of `f` on `V`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::levimodule::{LeviModule, DEFAULT_DIM_CAP};
use crate::liealgebra::{BasisElement, ChevalleyAlgebra};
use crate::matrix::{Fraction, MatrixOperator, WeylMatrixOperator};
use crate::opcount;
use crate::parabolic::ParabolicDatum;
use crate::polynomial::ExponentPolynomial;
use crate::rational::Rational;
use crate::rootsystem::{RootSystem, SimpleType};
use crate::uea::{GeneratorOrder, ReduceOptions, ReduceStats, Reducer, UEAElement};
use crate::weyl::{dense, omega, WeylMonomial, WeylOperator};

/// Everything needed to compute images for one configuration.
pub struct Embedder {
    alg: ChevalleyAlgebra,
    parabolic: ParabolicDatum,
    module: LeviModule,
    order: GeneratorOrder,
    options: ReduceOptions,
}

/// `(p, b)` pairs grouped by trailing factor (`None` for a bare word).
pub type SplitTerms = BTreeMap<Option<BasisElement>, Vec<(ExponentPolynomial, Vec<i64>)>>;

/// The image of one generator with its bookkeeping.
#[derive(Debug, Clone)]
pub struct GeneratorImage {
    pub generator: BasisElement,
    pub reduced: UEAElement,
    pub operator: WeylMatrixOperator,
    pub op_count: u64,
    pub steps: u64,
}

#[derive(Debug, Clone)]
pub struct EmbeddingResult {
    pub simple_type: SimpleType,
    pub crossed: Vec<bool>,
    pub lambda: Vec<Rational>,
    pub n: usize,
    pub module_dim: usize,
    /// The `u_i`, in PBW-word order.
    pub nilradical_generators: Vec<BasisElement>,
    /// `g_1, g_{-1}, g_2, g_{-2}, …, h_1, …, h_r`.
    pub images: Vec<GeneratorImage>,
}

/// Order in which images are reported.
pub fn generator_sequence(rank: usize) -> Vec<BasisElement> {
    let mut out = Vec::with_capacity(3 * rank);
    for i in 1..=rank as i32 {
        out.push(BasisElement::Root(i));
        out.push(BasisElement::Root(-i));
    }
    out.extend((1..=rank).map(BasisElement::Cartan));
    out
}

impl Embedder {
    pub fn new(ty: SimpleType, crossed: &[bool], lambda: &[Rational]) -> Result<Self> {
        Self::with_options(ty, crossed, lambda, DEFAULT_DIM_CAP, ReduceOptions::default())
    }

    pub fn with_options(
        ty: SimpleType,
        crossed: &[bool],
        lambda: &[Rational],
        dim_cap: u64,
        options: ReduceOptions,
    ) -> Result<Self> {
        if !crossed.iter().any(|c| *c) {
            return Err(Error::InvalidInput("at least one simple root must be crossed".into()));
        }
        let alg = ChevalleyAlgebra::new(RootSystem::build(ty));
        let parabolic = ParabolicDatum::new(&alg, crossed)?;
        let module = LeviModule::build_irreducible(&alg, &parabolic, lambda, dim_cap)?;
        Ok(Self::from_parts(alg, parabolic, module, options))
    }

    pub fn from_parts(alg: ChevalleyAlgebra, parabolic: ParabolicDatum, module: LeviModule, options: ReduceOptions) -> Self {
        let order = parabolic.reduction_order(&alg);
        Embedder { alg, parabolic, module, order, options }
    }

    pub fn algebra(&self) -> &ChevalleyAlgebra {
        &self.alg
    }

    pub fn parabolic(&self) -> &ParabolicDatum {
        &self.parabolic
    }

    pub fn module(&self) -> &LeviModule {
        &self.module
    }

    pub fn order(&self) -> &GeneratorOrder {
        &self.order
    }

    /// Reduced form of `g·u_1^{a_1} … u_n^{a_n}`.
    pub fn generic_product(&self, g: BasisElement) -> Result<(UEAElement, ReduceStats)> {
        let u = UEAElement::monomial(UEAElement::generic_word(self.parabolic.generators()));
        Reducer::new(&self.alg).reduce(&u.left_multiply(g), &self.order, self.options)
    }

    /// Splits reduced terms into `(p, b)` data keyed by the trailing factor.
    pub fn split_terms(&self, e: &UEAElement) -> Result<SplitTerms> {
        let n = self.parabolic.nilradical_dimension();
        let mut out = SplitTerms::new();
        for (m, p) in e.terms() {
            let mut shift = vec![0i64; n];
            let mut seen = vec![false; n];
            let mut trailing = None;
            let factors = m.factors();
            for (idx, (g, exp)) in factors.iter().enumerate() {
                match self.parabolic.position(*g) {
                    Some(pos) => {
                        let (var, c) = exp.as_shifted_var().filter(|(v, _)| *v == pos).ok_or_else(|| {
                            Error::TermShape(format!("exponent {} on {} in {}", exp.latex(), g.latex(), m.latex()))
                        })?;
                        if seen[var] || trailing.is_some() {
                            return Err(Error::TermShape(m.latex()));
                        }
                        seen[var] = true;
                        shift[var] = -c;
                    }
                    None => {
                        if idx + 1 != factors.len() || exp.as_constant().is_none_or(|c| !c.is_one()) {
                            return Err(Error::TermShape(m.latex()));
                        }
                        trailing = Some(*g);
                    }
                }
            }
            // a variable whose factor cancelled out entirely would need a_i - b_i = 0
            if seen.iter().any(|s| !s) {
                return Err(Error::TermShape(format!("missing nilradical factor in {}", m.latex())));
            }
            out.entry(trailing).or_default().push((p.clone(), shift));
        }
        Ok(out)
    }

    /// Assembles `Σ_f ω(data_f) ⊗ act(f)`.
    pub fn extract_operator(&self, e: &UEAElement) -> Result<WeylMatrixOperator> {
        let dim = self.module.dim();
        let mut out = WeylMatrixOperator::zero(dim);
        for (trailing, data) in self.split_terms(e)? {
            let matrix = match trailing {
                None => MatrixOperator::identity(dim),
                Some(f) => self.module.act(f),
            };
            if matrix.is_zero() {
                continue;
            }
            let w = omega(&data)?;
            out = out.add(&WeylMatrixOperator::tensor(&w, &matrix));
        }
        Ok(out)
    }

    /// The image of an arbitrary basis element.
    pub fn image(&self, g: BasisElement) -> Result<GeneratorImage> {
        let (out, op_count) = opcount::measure(|| -> Result<_> {
            let (reduced, stats) = self.generic_product(g)?;
            let operator = self.extract_operator(&reduced)?;
            Ok((reduced, stats, operator))
        });
        let (reduced, stats, operator) = out?;
        Ok(GeneratorImage { generator: g, reduced, operator, op_count, steps: stats.steps })
    }

    fn images_of(&self, gens: &[BasisElement]) -> Result<Vec<GeneratorImage>> {
        #[cfg(feature = "parallel")]
        {
            use rayon::prelude::*;
            gens.par_iter().map(|g| self.image(*g)).collect()
        }
        #[cfg(not(feature = "parallel"))]
        {
            gens.iter().map(|g| self.image(*g)).collect()
        }
    }

    /// Images of all simple generators and Cartan elements.
    pub fn embed(&self) -> Result<EmbeddingResult> {
        let gens = generator_sequence(self.alg.rank());
        let images = self.images_of(&gens)?;
        Ok(EmbeddingResult {
            simple_type: self.alg.roots().simple_type(),
            crossed: self.parabolic.crossed().to_vec(),
            lambda: self.module.lambda().to_vec(),
            n: self.parabolic.nilradical_dimension(),
            module_dim: self.module.dim(),
            nilradical_generators: self.parabolic.generators().to_vec(),
            images,
        })
    }
}

/// One-call form of [`Embedder::embed`].
pub fn embed(ty: SimpleType, crossed: &[bool], lambda: &[Rational]) -> Result<EmbeddingResult> {
    Embedder::new(ty, crossed, lambda)?.embed()
}

impl EmbeddingResult {
    pub fn image(&self, g: BasisElement) -> Option<&WeylMatrixOperator> {
        self.images.iter().find(|i| i.generator == g).map(|i| &i.operator)
    }

    /// Images of the simple root vectors `g_{±i}`, in reporting order.
    pub fn simple_images(&self) -> Vec<&WeylMatrixOperator> {
        self.images.iter().filter(|i| !i.generator.is_cartan()).map(|i| &i.operator).collect()
    }

    pub fn total_op_count(&self) -> u64 {
        self.images.iter().map(|i| i.op_count).sum()
    }

    pub fn to_document(&self) -> EmbeddingDocument {
        EmbeddingDocument {
            format: DOCUMENT_FORMAT.into(),
            version: DOCUMENT_VERSION,
            simple_type: self.simple_type.to_string(),
            crossed: self.crossed.iter().map(|c| *c as u8).collect(),
            lambda: self.lambda.iter().map(Fraction::from).collect(),
            n: self.n,
            module_dim: self.module_dim,
            nilradical_generators: self.nilradical_generators.iter().map(|g| g.latex()).collect(),
            total_op_count: self.total_op_count(),
            images: self
                .images
                .iter()
                .map(|img| ImageDocument {
                    generator: img.generator.latex(),
                    op_count: img.op_count,
                    reduction_steps: img.steps,
                    entries: operator_entries(&img.operator, self.n),
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_document()).expect("document serializes")
    }

    /// Human-readable listing, one generator per line.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for img in &self.images {
            s.push_str(&format!("{} -> {}\n", img.generator.plain(), img.operator.ascii()));
        }
        s
    }

    /// LaTeX listing in the form `\Phi(g_{1}) &=& (…)\otimes \mathrm{id}\\`.
    pub fn to_latex(&self) -> String {
        let mut s = String::from("\\begin{array}{rcl}\n");
        for img in &self.images {
            s.push_str(&format!("\\Phi({}) &=& {}\\\\\n", img.generator.latex(), img.operator.latex()));
        }
        s.push_str("\\end{array}\n");
        s
    }
}

pub const DOCUMENT_FORMAT: &str = "lieweyl-embedding";
pub const DOCUMENT_VERSION: u32 = 1;

/// Serialized form of an [`EmbeddingResult`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddingDocument {
    pub format: String,
    pub version: u32,
    #[serde(rename = "type")]
    pub simple_type: String,
    pub crossed: Vec<u8>,
    pub lambda: Vec<Fraction>,
    pub n: usize,
    pub module_dim: usize,
    pub nilradical_generators: Vec<String>,
    pub total_op_count: u64,
    pub images: Vec<ImageDocument>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ImageDocument {
    pub generator: String,
    pub op_count: u64,
    pub reduction_steps: u64,
    pub entries: Vec<EntryDocument>,
}

/// The Weyl operator sitting at matrix position `(row, col)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryDocument {
    pub row: usize,
    pub col: usize,
    pub terms: Vec<TermDocument>,
}

/// `coefficient · x^x ∂^d` with dense exponent vectors of length `n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermDocument {
    pub coefficient: Fraction,
    pub x: Vec<u32>,
    pub d: Vec<u32>,
}

fn operator_entries(op: &WeylMatrixOperator, n: usize) -> Vec<EntryDocument> {
    op.entries()
        .map(|(&(row, col), w)| EntryDocument {
            row,
            col,
            terms: w
                .display_terms()
                .into_iter()
                .map(|(m, c)| TermDocument { coefficient: c.into(), x: dense(&m.x, n), d: dense(&m.d, n) })
                .collect(),
        })
        .collect()
}

impl EmbeddingDocument {
    pub fn from_json(s: &str) -> Result<Self> {
        let doc: EmbeddingDocument = serde_json::from_str(s).map_err(|e| Error::Document(e.to_string()))?;
        if doc.format != DOCUMENT_FORMAT || doc.version != DOCUMENT_VERSION {
            return Err(Error::Document(format!("unsupported format {} v{}", doc.format, doc.version)));
        }
        Ok(doc)
    }

    /// Rebuilds the operators, in document order.
    pub fn operators(&self) -> Result<Vec<(BasisElement, WeylMatrixOperator)>> {
        self.images
            .iter()
            .map(|img| {
                let g = BasisElement::parse(&img.generator)
                    .ok_or_else(|| Error::Document(format!("bad generator {}", img.generator)))?;
                let mut op = WeylMatrixOperator::zero(self.module_dim);
                for e in &img.entries {
                    if e.row >= self.module_dim || e.col >= self.module_dim {
                        return Err(Error::Document(format!("entry ({}, {}) out of range", e.row, e.col)));
                    }
                    let mut w = WeylOperator::zero();
                    for t in &e.terms {
                        if t.x.len() != self.n || t.d.len() != self.n {
                            return Err(Error::Document("exponent vector has wrong length".into()));
                        }
                        let c = Rational::try_from(&t.coefficient)?;
                        w.add_term(
                            WeylMonomial { x: crate::weyl::sparse(&t.x), d: crate::weyl::sparse(&t.d) },
                            c,
                        );
                    }
                    op.add_entry(e.row, e.col, &w);
                }
                Ok((g, op))
            })
            .collect()
    }
}
