//! Command-line interface definition.

use std::path::PathBuf;

use clap::{ArgGroup, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(
    name = "gradealg",
    version,
    about = "Exact-arithmetic toolkit for group-graded algebras, regular gradings, and graded identities"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Write the machine-readable report to this path.
    #[arg(long, global = true, value_name = "PATH")]
    pub json: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the algebra axioms of a .galg file and list violations.
    Validate {
        #[arg(long)]
        input: PathBuf,
    },
    /// Bicharacter, decomposition matrix, and k-regularity with witnesses.
    CheckRegular {
        #[arg(long)]
        input: PathBuf,
        /// Check all degree tuples of length 1..=k.
        #[arg(long)]
        k: usize,
    },
    /// Extract the commutation-factor table and verify its axioms.
    Bicharacter {
        #[arg(long)]
        input: PathBuf,
    },
    /// Decomposition matrix, exact determinant, and minimality verdict.
    Matrix {
        #[arg(long)]
        input: PathBuf,
    },
    /// Whether any nonzero odd element right-annihilates the odd part.
    StrongRegular {
        #[arg(long)]
        input: PathBuf,
    },
    /// Jacobson radical with its graded components.
    Radical {
        #[arg(long)]
        input: PathBuf,
    },
    /// Graded polynomial identity tests.
    #[command(group(ArgGroup::new("mode").required(true).args(["generators_grassmann", "poly", "space"])))]
    Identities {
        #[arg(long)]
        input: PathBuf,
        /// Test the three Grassmann T-ideal generators.
        #[arg(long)]
        generators_grassmann: bool,
        /// Test one polynomial literal, e.g. "1/1 x1:1 x2:1 + 1/1 x2:1 x1:1".
        #[arg(long, value_name = "LITERAL")]
        poly: Option<String>,
        /// Compute the identity space for --pattern.
        #[arg(long)]
        space: bool,
        /// Degree pattern: variables separated by ';' (or ',' for
        /// single-factor groups), components within a variable by ','.
        #[arg(long, requires = "space", value_name = "PATTERN")]
        pattern: Option<String>,
    },
    /// Build the Grassmann envelope of a Z2-graded coefficient algebra.
    Envelope {
        /// Coefficient algebra file.
        #[arg(long)]
        c: PathBuf,
        /// Truncation size of the Grassmann factor.
        #[arg(long)]
        n: usize,
        /// Write the envelope as a .galg file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verified embedding of the n-generator Grassmann algebra.
    Embed {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        n: usize,
    },
    /// Direct-system chain of Grassmann subalgebras with all laws checked.
    Chain {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        nmax: usize,
    },
    /// Types I-IV classification of the subalgebra generated by the given
    /// homogeneous elements.
    Classify {
        #[arg(long)]
        input: PathBuf,
        /// File with one element expression per line.
        #[arg(long)]
        generators: PathBuf,
    },
    /// Variety-equivalence surrogates for a Z2-graded coefficient algebra.
    VarietyCheck {
        #[arg(long)]
        input: PathBuf,
    },
    /// Write a built-in fixture as a .galg file.
    Fixture {
        #[command(subcommand)]
        kind: FixtureKind,
    },
    /// Performance smoke tests.
    Bench {
        #[command(subcommand)]
        kind: BenchKind,
    },
}

#[derive(Debug, Subcommand)]
pub enum FixtureKind {
    /// Materialized Grassmann algebra E_n (n <= 12).
    Grassmann {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Full matrix algebra with the trivial grading.
    #[command(name = "wall-a1")]
    WallA1 {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Block matrix algebra M_{k,l}: diagonal blocks even, off-diagonal odd.
    #[command(name = "wall-a2")]
    WallA2 {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        l: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// M_n(K + cK) with c^2 = 1 and c odd.
    #[command(name = "wall-a3")]
    WallA3 {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Group algebra of the given group (only `z2` is built in: K + cK).
    #[command(name = "group-algebra")]
    GroupAlgebra {
        group: String,
        #[arg(long)]
        out: PathBuf,
    },
    /// Z2xZ2 twisted group algebra with anticommuting generators.
    #[command(name = "twisted-z2z2")]
    TwistedZ2z2 {
        #[arg(long)]
        out: PathBuf,
    },
    /// K[x,t]/(t^2 - 1, x^m) with x even nilpotent and t odd.
    #[command(name = "poly-quotient")]
    PolyQuotient {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Componentwise direct sum of two algebra files over the same group.
    #[command(name = "direct-sum")]
    DirectSum {
        left: PathBuf,
        right: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Debug, Subcommand)]
pub enum BenchKind {
    /// Random blade products in E_n with a naive-sign oracle sample.
    Blades {
        #[arg(long, default_value_t = 40)]
        n: usize,
        /// Number of random blade pairs to multiply.
        #[arg(long, default_value_t = 1_000_000)]
        terms: usize,
    },
}
