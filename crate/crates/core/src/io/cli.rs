//! Command-line surface.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::error::{Error, Result};
use crate::groebner::{groebner_basis_with, GbOptions};
use crate::invariants::InvariantBundle;
use crate::poly::{MonomialOrder, DEFAULT_PRIME};
use crate::resolution::betti_table;
use crate::verifier::{
    all_pass, corpus_specs, generate_instance, run_corpus, summarize, write_jsonl, write_tsv, CheckConfig, Family,
    Instance, InstanceSpec, CHECK_GROUPS,
};

use super::parse::{parse_ideal_with_prime, IdealFile};
use super::print::format_polynomial;

#[derive(Debug, Parser)]
#[command(name = "betti-bounds", version, about = "Betti tables and checks of uniform pd/reg bounds")]
pub struct CliConfig {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Clone, Args)]
pub struct CommonArgs {
    /// Field characteristic; overrides the header of input files.
    #[arg(long, global = true)]
    pub prime: Option<u64>,
    /// Monomial order for `gb`.
    #[arg(long, global = true, default_value = "grevlex")]
    pub order: String,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Reference Gröbner bases without pair criteria.
    #[arg(long, global = true)]
    pub faithful: bool,
    #[arg(long, global = true, value_delimiter = ',', default_value = "1,2,3,4")]
    pub r_sweep: Vec<usize>,
    /// Write reports here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the reduced Gröbner basis.
    Gb { file: PathBuf },
    /// Print the Betti table of S/I.
    Betti { file: PathBuf },
    /// Print pd, depth, reg, alpha and friends as JSON.
    Invariants { file: PathBuf },
    /// Run bound checks on ideal files.
    Check {
        files: Vec<PathBuf>,
        #[arg(long, conflicts_with = "name")]
        all: bool,
        /// Check group to run; repeatable.
        #[arg(long)]
        name: Vec<String>,
    },
    /// Generate a seeded corpus and run every check on it.
    Corpus {
        #[arg(long, default_value_t = 500)]
        size: usize,
        /// Also write a TSV summary.
        #[arg(long)]
        tsv: Option<PathBuf>,
        #[arg(long)]
        name: Vec<String>,
    },
}

impl CommonArgs {
    fn order(&self) -> Result<MonomialOrder> {
        MonomialOrder::parse(&self.order)
    }

    fn load(&self, path: &PathBuf) -> Result<IdealFile> {
        parse_ideal_with_prime(&std::fs::read_to_string(path)?, self.prime)
    }

    fn output(&self) -> Result<Box<dyn Write>> {
        Ok(match &self.out {
            Some(p) => Box::new(BufWriter::new(File::create(p)?)),
            None => Box::new(std::io::stdout().lock()),
        })
    }

    fn check_config(&self, names: &[String]) -> Result<CheckConfig> {
        for n in names {
            if !CHECK_GROUPS.contains(&n.as_str()) {
                return Err(Error::InvalidArgument(format!("unknown check {n:?}; known: {}", CHECK_GROUPS.join(", "))));
            }
        }
        if self.r_sweep.contains(&0) {
            return Err(Error::InvalidArgument("r must be positive".into()));
        }
        Ok(CheckConfig {
            seed: self.seed,
            r_sweep: self.r_sweep.clone(),
            faithful: self.faithful,
            groups: (!names.is_empty()).then(|| names.to_vec()),
            ..CheckConfig::default()
        })
    }
}

/// Runs a parsed command line; the value is the process exit code.
pub fn run_cli(config: &CliConfig) -> Result<i32> {
    let common = &config.common;
    match &config.command {
        Command::Gb { file } => {
            let f = common.load(file)?;
            let opts = if common.faithful { GbOptions::faithful() } else { GbOptions::default() };
            let gb = groebner_basis_with(&f.ideal, common.order()?, opts);
            let mut out = common.output()?;
            for g in gb.elements() {
                writeln!(out, "{}", format_polynomial(g, &f.names))?;
            }
            Ok(0)
        }
        Command::Betti { file } => {
            let f = common.load(file)?;
            let mut out = common.output()?;
            write!(out, "{}", betti_table(&f.ideal)?)?;
            Ok(0)
        }
        Command::Invariants { file } => {
            let f = common.load(file)?;
            let bundle = InvariantBundle::compute(&f.ideal)?;
            let mut out = common.output()?;
            writeln!(out, "{}", serde_json::to_string_pretty(&bundle).map_err(|e| Error::Io(e.to_string()))?)?;
            Ok(0)
        }
        Command::Check { files, all, name } => {
            let cfg = common.check_config(if *all { &[] } else { name })?;
            if !*all && name.is_empty() {
                return Err(Error::InvalidArgument("pass --all or --name".into()));
            }
            let instances = files
                .iter()
                .map(|p| {
                    let f = common.load(p)?;
                    let mut inst = Instance::new(p.display().to_string(), Family::FromFile, f.ideal);
                    inst.raw_generators = f.raw_generators;
                    inst.height = f.height;
                    inst.unmixed_radical = f.unmixed_radical;
                    Ok(inst)
                })
                .collect::<Result<Vec<_>>>()?;
            let reports = run_corpus(&instances, &cfg);
            write_jsonl(&reports, common.output()?)?;
            report_summary(&reports);
            Ok(if all_pass(&reports) { 0 } else { 1 })
        }
        Command::Corpus { size, tsv, name } => {
            let cfg = common.check_config(name)?;
            let prime = common.prime.unwrap_or(DEFAULT_PRIME as u64);
            let instances = corpus_specs(common.seed, *size)
                .into_iter()
                .map(|(id, spec)| {
                    let spec = InstanceSpec { prime, ..spec };
                    Ok(Instance::new(id, spec.family, generate_instance(&spec)?))
                })
                .collect::<Result<Vec<_>>>()?;
            let reports = run_corpus(&instances, &cfg);
            write_jsonl(&reports, common.output()?)?;
            if let Some(path) = tsv {
                write_tsv(&reports, BufWriter::new(File::create(path)?))?;
            }
            report_summary(&reports);
            Ok(if all_pass(&reports) { 0 } else { 1 })
        }
    }
}

fn report_summary(reports: &[crate::verifier::BoundReport]) {
    for (check, counts) in summarize(reports) {
        let parts: Vec<String> = counts.iter().map(|(v, n)| format!("{v}={n}")).collect();
        eprintln!("{check}: {}", parts.join(" "));
    }
}
