use rayon::prelude::*;

use super::{EnvElement, Envelope};
use crate::error::Result;
use crate::identity::{CheckOptions, CheckReport, Witness};
use crate::vector::Vector;

impl Envelope<'_> {
    /// Checks that generators satisfy the defining relations of the
    /// enveloping algebra inside `Ṽ(M)`: `<e_r, e_s> = [e_r, e_s]` for every
    /// ordered pair and `<e_r, e_s, e_k> = A(e_r, e_s, e_k)` for every
    /// ordered triple.
    pub fn verify_embedding_relations(&self) -> Result<CheckReport<EnvElement>> {
        self.verify_embedding_relations_with(&CheckOptions::default())
    }

    pub fn verify_embedding_relations_with(
        &self,
        opts: &CheckOptions,
    ) -> Result<CheckReport<EnvElement>> {
        let dim = self.spec().dim();
        let per_row: Vec<Result<Vec<Witness<EnvElement>>>> = (0..dim)
            .into_par_iter()
            .map(|r| {
                let mut out = Vec::new();
                let er = self.gen(r);
                for s in 0..dim {
                    let es = self.gen(s);
                    let lhs = self.star_commutator(&er, &es)?;
                    let rhs = self.lift(self.spec().bracket(r, s));
                    if lhs != rhs {
                        out.push(Witness {
                            relation: "bracket",
                            args: vec![er.clone(), es.clone()],
                            lhs,
                            rhs,
                        });
                    }
                }
                for s in 0..dim {
                    let es = self.gen(s);
                    for k in 0..dim {
                        let ek = self.gen(k);
                        let lhs = self.star_associator(&er, &es, &ek)?;
                        let rhs = self.lift(self.spec().ternary(r, s, k));
                        if lhs != rhs {
                            out.push(Witness {
                                relation: "associator",
                                args: vec![er.clone(), es.clone(), ek],
                                lhs,
                                rhs,
                            });
                        }
                    }
                }
                Ok(out)
            })
            .collect();
        let mut witnesses = Vec::new();
        for row in per_row {
            witnesses.extend(row?);
        }
        Ok(CheckReport::from_parts(
            "embedding-relations",
            dim * dim + dim * dim * dim,
            witnesses,
            opts,
        ))
    }

    /// For every split `i + j = n` with `i, j >= 1` and basis monomials `u`,
    /// `v` of those degrees, checks that `u * v` agrees with the product of
    /// `S(M)` (or the formal pair above degree three) up to terms of degree
    /// below `n`.
    pub fn verify_leading_term(&self, n: usize) -> Result<CheckReport<EnvElement>> {
        self.verify_leading_term_with(n, &CheckOptions::default())
    }

    pub fn verify_leading_term_with(
        &self,
        n: usize,
        opts: &CheckOptions,
    ) -> Result<CheckReport<EnvElement>> {
        let mut checked = 0;
        let mut witnesses = Vec::new();
        for i in 1..n {
            let left = self.pbw_basis(i)?;
            let right = self.pbw_basis(n - i)?;
            checked += left.len() * right.len();
            let found: Vec<Result<Vec<Witness<EnvElement>>>> = left
                .par_iter()
                .map(|u| {
                    let mut out = Vec::new();
                    for v in &right {
                        let lhs = self.star_monomials(u, v)?.component(n);
                        let rhs = self.leading_product(u, v)?;
                        if lhs != rhs {
                            out.push(Witness {
                                relation: "leading-term",
                                args: vec![
                                    EnvElement::monomial(u.clone()),
                                    EnvElement::monomial(v.clone()),
                                ],
                                lhs,
                                rhs,
                            });
                        }
                    }
                    Ok(out)
                })
                .collect();
            for part in found {
                witnesses.extend(part?);
            }
        }
        Ok(CheckReport::from_parts(
            format!("leading-term-{n}"),
            checked,
            witnesses,
            opts,
        ))
    }

    /// Round-trips every basis vector and every sample through the degree-one
    /// embedding.
    pub fn verify_iota(&self, samples: &[Vector]) -> Result<CheckReport> {
        let mut inputs: Vec<Vector> = self.spec().basis().indices().map(Vector::basis).collect();
        inputs.extend(samples.iter().cloned());
        let mut witnesses = Vec::new();
        for v in &inputs {
            let back = self.iota_roundtrip(v)?;
            if &back != v {
                witnesses.push(Witness {
                    relation: "iota",
                    args: vec![v.clone()],
                    lhs: back,
                    rhs: v.clone(),
                });
            }
        }
        Ok(CheckReport::from_parts(
            "iota-roundtrip",
            inputs.len(),
            witnesses,
            &CheckOptions::default(),
        ))
    }

    /// Leading-term reports for every total degree from 2 to `max_degree`
    /// (capped at three, above which `*` is the formal pairing).
    pub fn verify_leading_terms(&self, max_degree: usize) -> Result<Vec<CheckReport<EnvElement>>> {
        (2..=max_degree.min(3))
            .map(|n| self.verify_leading_term(n))
            .collect()
    }
}

