#!/usr/bin/env python3
"""
🧮 Born Toolkit - Command-Line Interface

═══════════════════════════════════════════════════════════════════════════════
📋 QUICK COMMAND REFERENCE
═══════════════════════════════════════════════════════════════════════════════

🔷 REFERENCE MEASUREMENT (SIC):
    python cli.py sic find -d 3 --seed 1 -o fid3.json     # Numerical fiducial search
    python cli.py sic verify --sic fid3.json              # Overlap + POVM check

🔁 OPERATORS <-> PROBABILITIES:
    python cli.py repr to-prob --rho rho.json --sic fid3.json -o p.json
    python cli.py repr from-prob -p p.json --sic fid3.json
    python cli.py repr povm-to-cond --povm povm.json --sic fid3.json -o R.json
    python cli.py repr cond-to-povm -R R.json --sic fid3.json

🎲 BORN RULE:
    python cli.py born -p p.json -R R.json -d 3 -o q.json
    python cli.py ltp -p p.json -R R.json
    python cli.py ltp-deviation -p p.json -R R.json -d 3

📐 QPLEX GEOMETRY:
    python cli.py geometry -d 3 [--classical]
    python cli.py mmd -d 2 [--states states.json]
    python cli.py valid-state -p p.json --sic fid3.json
    python cli.py valid-effect -r r.json --sic fid3.json
    python cli.py linear-extend --samples samples.json

💸 DUTCH BOOKS:
    python cli.py coherence prices --prices prices.json
    python cli.py coherence additivity --pE 0.2 --pF 0.3 --pEorF 0.6
    python cli.py coherence conditional --pE 0.5 --pFgivenE 0.4 --pEandF 0.3
    python cli.py coherence born -p p.json -R R.json -q q.json -d 2

🧪 SIMULATION:
    python cli.py sim one -q q.json --shots 100000 --seed 7 -o one.json
    python cli.py sim two -p p.json -R R.json --shots 100000 --seed 7 [--margin -d 2]
    python cli.py sim compare --counts one.json -q q.json

🎯 EXIT CODES:
    0  ok / coherent
    1  invalid input, failed validation, no convergence
    2  incoherence found (a Dutch-book witness was emitted)
    3  unreadable or malformed file, bad command line

Results go to standard output (or -o FILE); progress lines go to stderr.
Tolerance defaults come from config/tolerances.json (see config_manager.py).
═══════════════════════════════════════════════════════════════════════════════
"""

import argparse
import logging
import sys
from typing import Any, Dict, List, Optional

import numpy as np

from coherence import (
    check_additivity,
    check_born_coherence,
    check_complement,
    check_joint_conditional,
    check_price_range,
    complement,
    validate_prices,
)
from config_manager import ToleranceConfigManager, config_manager
from errors import ConvergenceError, DimensionError, FileFormatError
from experiments import CountTable, RunConfig, empirical_compare, irreducible_margin, sample_experiment_one, sample_experiment_two
from qplex import basis_states, classical_bounds, find_mmd, linear_extension, quantum_bounds, valid_effect, valid_state
from representation import (
    CondMatrix,
    OutcomeDist,
    ProbState,
    born,
    cond_to_povm,
    ltp,
    ltp_deviation,
    povm_to_cond,
    prob_to_state,
    state_to_prob,
)
from sic import SicSystem, build_sic, builtin_fiducial, find_fiducial, frame_potential_error, has_builtin_fiducial, verify_sic
from utils import (
    dumps,
    matrix_from_json,
    matrix_to_json,
    povm_from_json,
    povm_to_json,
    prices_from_json,
    read_file,
    require_vector,
    samples_from_json,
    states_from_json,
    write_json,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_INCOHERENT = 2
EXIT_IO = 3


class CliParser(argparse.ArgumentParser):
    """argparse with usage errors mapped to the file/parse exit code."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_IO, f"{self.prog}: error: {message}\n")


class BornRuleCLI:
    """Routes subcommands to the library and owns output and exit codes."""

    def __init__(self, config: Optional[ToleranceConfigManager] = None, stdout=None, stderr=None):
        self.config = config or config_manager
        self.stdout = stdout or sys.stdout
        self.stderr = stderr or sys.stderr

    # ═══════════════════════════════════════════════════════════════════════════════
    # 🛠️  UTILITY METHODS
    # ═══════════════════════════════════════════════════════════════════════════════

    def print_success(self, message: str):
        print(f"✅ {message}", file=self.stderr)

    def print_warning(self, message: str):
        print(f"⚠️  {message}", file=self.stderr)

    def print_error(self, message: str):
        print(f"❌ {message}", file=self.stderr)

    def param(self, value, key: str):
        """Explicit flag value, else the configured default."""
        return self.config.get(key) if value is None else value

    def emit(self, payload: Any, output: Optional[str] = None):
        if output:
            write_json(payload, output)
            self.print_success(f"Wrote {output}")
        else:
            self.stdout.write(dumps(payload))

    def load_sic(self, args) -> SicSystem:
        if getattr(args, "sic", None):
            return read_file(args.sic, SicSystem.from_dict)
        d = getattr(args, "d", None)
        if d is not None and has_builtin_fiducial(d):
            return build_sic(builtin_fiducial(d))
        raise DimensionError("pass --sic FILE (built-in fiducials exist only for d = 2, 3)")

    # ═══════════════════════════════════════════════════════════════════════════════
    # 🔷 SIC
    # ═══════════════════════════════════════════════════════════════════════════════

    def sic_find(self, args) -> int:
        restarts = int(self.param(args.restarts, "fiducial_restarts"))
        tol = self.param(args.tol, "fiducial_tol")
        fid = find_fiducial(args.d, seed=args.seed, restarts=restarts, tol=tol, workers=args.workers)
        self.print_success(f"d={args.d}: frame-potential error {frame_potential_error(fid):.3g}")
        self.emit(fid.to_dict(), args.output)
        return EXIT_OK

    def sic_verify(self, args) -> int:
        report = verify_sic(self.load_sic(args), self.param(args.tol, "sic_verify_tol"))
        self.emit(report.to_dict(), args.output)
        return EXIT_OK if report.ok else EXIT_INVALID

    # ═══════════════════════════════════════════════════════════════════════════════
    # 🔁 REPRESENTATION
    # ═══════════════════════════════════════════════════════════════════════════════

    def repr_to_prob(self, args) -> int:
        rho = read_file(args.rho, matrix_from_json)
        p = state_to_prob(rho, self.load_sic(args), self.param(args.tol, "density_tol"))
        self.emit(p.to_dict(), args.output)
        return EXIT_OK

    def repr_from_prob(self, args) -> int:
        p = read_file(args.p, ProbState.from_dict)
        self.emit(matrix_to_json(prob_to_state(p, self.load_sic(args))), args.output)
        return EXIT_OK

    def repr_povm_to_cond(self, args) -> int:
        effects = read_file(args.povm, povm_from_json)
        R = povm_to_cond(effects, self.load_sic(args), self.param(args.tol, "povm_tol"))
        self.emit(R.to_dict(), args.output)
        return EXIT_OK

    def repr_cond_to_povm(self, args) -> int:
        R = read_file(args.R, CondMatrix.from_dict)
        self.emit(povm_to_json(cond_to_povm(R, self.load_sic(args))), args.output)
        return EXIT_OK

    # ═══════════════════════════════════════════════════════════════════════════════
    # 🎲 BORN RULE
    # ═══════════════════════════════════════════════════════════════════════════════

    def _p_and_R(self, args):
        return read_file(args.p, ProbState.from_dict), read_file(args.R, CondMatrix.from_dict)

    def born(self, args) -> int:
        p, R = self._p_and_R(args)
        q = born(p, R, args.d)
        if not q.valid:
            self.print_warning("p and R are not jointly physical: q leaves the simplex")
        self.emit(q.to_dict(), args.output)
        return EXIT_OK

    def ltp(self, args) -> int:
        p, R = self._p_and_R(args)
        self.emit(ltp(p, R).to_dict(), args.output)
        return EXIT_OK

    def ltp_deviation(self, args) -> int:
        p, R = self._p_and_R(args)
        self.emit({"ltp_deviation": ltp_deviation(p, R, args.d)}, args.output)
        return EXIT_OK

    # ═══════════════════════════════════════════════════════════════════════════════
    # 📐 QPLEX
    # ═══════════════════════════════════════════════════════════════════════════════

    def geometry(self, args) -> int:
        geom = classical_bounds(args.d) if args.classical else quantum_bounds(args.d)
        self.emit(geom.to_dict(), args.output)
        return EXIT_OK

    def mmd(self, args) -> int:
        geom = classical_bounds(args.d) if args.classical else quantum_bounds(args.d)
        if args.states:
            states = [ProbState(v) for v in read_file(args.states, states_from_json)]
        elif args.classical:
            states = basis_states(geom.N, geom.L)
        else:
            # Images of the computational basis |k><k|
            sic = self.load_sic(args)
            states = [state_to_prob(np.diag(row), sic) for row in np.eye(sic.d)]
        result = find_mmd(states, geom, self.param(args.tol, "mmd_tol"))
        if not result.certified:
            self.print_warning("candidate set too large for exact search: result is a greedy lower bound")
        self.emit({**result.to_dict(), "bound": geom.mmd_bound}, args.output)
        return EXIT_OK

    def valid_state(self, args) -> int:
        p = read_file(args.p, ProbState.from_dict)
        report = valid_state(p, self.load_sic(args), self.param(args.tol, "membership_tol"))
        self.emit(report.to_dict(), args.output)
        return EXIT_OK if report.ok else EXIT_INVALID

    def valid_effect(self, args) -> int:
        r = read_file(args.r, lambda data: require_vector(data, "r"))
        report = valid_effect(r, self.load_sic(args), self.param(args.tol, "membership_tol"))
        self.emit(report.to_dict(), args.output)
        return EXIT_OK if report.ok else EXIT_INVALID

    def linear_extend(self, args) -> int:
        samples = read_file(args.samples, samples_from_json)
        ext = linear_extension(samples, self.param(args.tol, "extension_tol"))
        self.emit(ext.to_dict(), args.output)
        return EXIT_OK

    # ═══════════════════════════════════════════════════════════════════════════════
    # 💸 COHERENCE
    # ═══════════════════════════════════════════════════════════════════════════════

    def _verdict(self, verdict, output: Optional[str]) -> int:
        if verdict.coherent:
            print("coherent", file=self.stdout)
            if output:
                write_json(verdict.to_dict(), output)
            return EXIT_OK
        self.print_error(f"incoherent: guaranteed loss {verdict.witness.guaranteed_loss:.6g}")
        self.emit(verdict.to_dict(), output)
        return EXIT_INCOHERENT

    def coherence_prices(self, args) -> int:
        prices = read_file(args.prices, prices_from_json)
        stake = self.param(args.stake, "stake")
        report = validate_prices(prices)
        witnesses: List[Dict] = []
        for event, price in prices.items():
            verdict = check_price_range(event, price, stake)
            if not verdict.coherent:
                witnesses.append({"events": [event], **verdict.to_dict()})
        done = set()
        for event, price in prices.items():
            other = complement(event)
            pair = frozenset((event, other))
            if other not in prices or pair in done:
                continue
            done.add(pair)
            if 0 <= price <= 1 and 0 <= prices[other] <= 1:
                verdict = check_complement(price, prices[other], stake)
                if not verdict.coherent:
                    witnesses.append({"events": [event, other], **verdict.to_dict()})
        if report.ok:
            print("coherent", file=self.stdout)
            if args.output:
                write_json({"report": report.to_dict(), "witnesses": []}, args.output)
            return EXIT_OK
        self.emit({"report": report.to_dict(), "witnesses": witnesses}, args.output)
        return EXIT_INCOHERENT if witnesses else EXIT_INVALID

    def coherence_additivity(self, args) -> int:
        verdict = check_additivity(args.pE, args.pF, args.pEorF, self.param(args.stake, "stake"))
        return self._verdict(verdict, args.output)

    def coherence_conditional(self, args) -> int:
        verdict = check_joint_conditional(args.pE, args.pFgivenE, args.pEandF,
                                          self.param(args.stake, "stake"))
        return self._verdict(verdict, args.output)

    def coherence_born(self, args) -> int:
        p, R = self._p_and_R(args)
        q = read_file(args.q, OutcomeDist.from_dict)
        verdict = check_born_coherence(p, R, q, args.d, tol=self.param(args.tol, "born_coherence_tol"),
                                       stake=self.param(args.stake, "stake"))
        return self._verdict(verdict, args.output)

    # ═══════════════════════════════════════════════════════════════════════════════
    # 🧪 SIMULATION
    # ═══════════════════════════════════════════════════════════════════════════════

    def _run_config(self, args) -> RunConfig:
        return RunConfig(shots=int(self.param(args.shots, "shots")), seed=args.seed,
                         generator=args.generator, shards=args.shards)

    def sim_one(self, args) -> int:
        q = read_file(args.q, OutcomeDist.from_dict)
        table = sample_experiment_one(q, self._run_config(args))
        self.emit(table.to_dict(), args.output)
        return EXIT_OK

    def sim_two(self, args) -> int:
        p, R = self._p_and_R(args)
        cfg = self._run_config(args)
        if args.margin:
            if args.d is None:
                raise ValueError("--margin needs -d")
            report = irreducible_margin(p, R, args.d, cfg)
            self.emit(report.to_dict(), args.output)
            return EXIT_OK
        self.emit(sample_experiment_two(p, R, cfg).to_dict(), args.output)
        return EXIT_OK

    def sim_compare(self, args) -> int:
        table = read_file(args.counts, CountTable.from_dict)
        if table.shape is not None:
            table = table.marginal()
        predicted = read_file(args.q, OutcomeDist.from_dict)
        deviation = empirical_compare(table, predicted)
        band = 4.0 / np.sqrt(table.total)
        self.emit({"max_deviation": deviation, "band": band, "within_band": deviation <= band},
                  args.output)
        return EXIT_OK


# ═══════════════════════════════════════════════════════════════════════════════
# Parser
# ═══════════════════════════════════════════════════════════════════════════════
def _add_output(p):
    p.add_argument("-o", "--output", metavar="FILE", help="Write the result to FILE instead of stdout")


def _add_tol(p, key: str):
    p.add_argument("--tol", type=float, default=None,
                   help=f"Tolerance (default: {key} from the configuration)")


def _add_sic(p, with_d: bool = True):
    p.add_argument("--sic", metavar="FILE", help="Fiducial or SIC file (from `sic find`)")
    if with_d:
        p.add_argument("-d", type=int, help="Use the built-in fiducial for d = 2 or 3 instead of --sic")


def _add_p_R(p):
    p.add_argument("-p", required=True, metavar="FILE", help="ProbState file {\"p\": [...]}")
    p.add_argument("-R", required=True, metavar="FILE", help="CondMatrix file {\"J\", \"N\", \"R\"}")


def _add_stake(p):
    p.add_argument("--stake", type=float, default=None, help="Ticket payout (default: stake from the configuration)")


def _add_run(p):
    p.add_argument("--seed", type=int, required=True, help="64-bit seed (required)")
    p.add_argument("--shots", type=int, default=None, help="Number of runs (default: shots from the configuration)")
    p.add_argument("--shards", type=int, default=1, help="Split shots over this many threads (default: 1)")
    p.add_argument("--generator", default="PCG64", choices=["PCG64", "Philox"],
                   help="numpy bit generator (default: PCG64)")


def build_parser() -> CliParser:
    parser = CliParser(prog="cli.py", description="🧮 Born Toolkit - SIC representation, Born rule and Dutch books",
                       formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--verbose", action="store_true", help="Log at DEBUG level to stderr")
    parser.add_argument("--config", metavar="FILE", help="Tolerance configuration (default: config/tolerances.json)")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    # sic
    sic = sub.add_parser("sic", help="Build and verify the reference measurement")
    sic_sub = sic.add_subparsers(dest="action", required=True)
    p = sic_sub.add_parser("find", help="Numerical Weyl-Heisenberg fiducial search")
    p.add_argument("-d", type=int, required=True, help="Hilbert-space dimension (2..16)")
    p.add_argument("--seed", type=int, required=True, help="Seed for the restart starting points (required)")
    p.add_argument("--restarts", type=int, default=None, help="Random restarts (default: fiducial_restarts)")
    p.add_argument("--workers", type=int, default=None, help="Threads for the restarts (default: serial)")
    _add_tol(p, "fiducial_tol")
    _add_output(p)
    p.set_defaults(handler=BornRuleCLI.sic_find)
    p = sic_sub.add_parser("verify", help="Check SIC overlaps and POVM completeness")
    _add_sic(p)
    _add_tol(p, "sic_verify_tol")
    _add_output(p)
    p.set_defaults(handler=BornRuleCLI.sic_verify)

    # repr
    rep = sub.add_parser("repr", help="Convert between operators and probabilities")
    rep_sub = rep.add_subparsers(dest="action", required=True)
    p = rep_sub.add_parser("to-prob", help="Density matrix -> ProbState")
    p.add_argument("--rho", required=True, metavar="FILE", help="Matrix file")
    _add_sic(p)
    _add_tol(p, "density_tol")
    _add_output(p)
    p.set_defaults(handler=BornRuleCLI.repr_to_prob)
    p = rep_sub.add_parser("from-prob", help="ProbState -> density matrix")
    p.add_argument("-p", required=True, metavar="FILE", help="ProbState file")
    _add_sic(p)
    _add_output(p)
    p.set_defaults(handler=BornRuleCLI.repr_from_prob)
    p = rep_sub.add_parser("povm-to-cond", help="POVM -> CondMatrix")
    p.add_argument("--povm", required=True, metavar="FILE", help="POVM file {\"effects\": [...]}")
    _add_sic(p)
    _add_tol(p, "povm_tol")
    _add_output(p)
    p.set_defaults(handler=BornRuleCLI.repr_povm_to_cond)
    p = rep_sub.add_parser("cond-to-povm", help="CondMatrix -> POVM")
    p.add_argument("-R", required=True, metavar="FILE", help="CondMatrix file")
    _add_sic(p)
    _add_output(p)
    p.set_defaults(handler=BornRuleCLI.repr_cond_to_povm)

    # Born rule
    for name, handler, needs_d, text in (
        ("born", BornRuleCLI.born, True, "q = R Phi p"),
        ("ltp", BornRuleCLI.ltp, False, "s = R p (Law of Total Probability)"),
        ("ltp-deviation", BornRuleCLI.ltp_deviation, True, "max_j |born - ltp|"),
    ):
        p = sub.add_parser(name, help=text)
        _add_p_R(p)
        if needs_d:
            p.add_argument("-d", type=int, required=True, help="Hilbert-space dimension")
        _add_output(p)
        p.set_defaults(handler=handler)

    # qplex
    p = sub.add_parser("geometry", help="Inner-product bounds, MMD bound and ball radii")
    p.add_argument("-d", type=int, required=True, help="Dimension")
    p.add_argument("--classical", action="store_true", help="Probability simplex (N = d, L = 0, U = 1)")
    _add_output(p)
    p.set_defaults(handler=BornRuleCLI.geometry)
    p = sub.add_parser("mmd", help="Largest MMD subset of a set of states")
    p.add_argument("-d", type=int, required=True, help="Dimension")
    p.add_argument("--states", metavar="FILE", help="States file {\"states\": [...]} (default: computational-basis images or simplex vertices)")
    p.add_argument("--classical", action="store_true", help="Use the classical geometry")
    _add_sic(p, with_d=False)
    _add_tol(p, "mmd_tol")
    _add_output(p)
    p.set_defaults(handler=BornRuleCLI.mmd)
    p = sub.add_parser("valid-state", help="Is p the image of a density matrix?")
    p.add_argument("-p", required=True, metavar="FILE", help="ProbState file")
    _add_sic(p)
    _add_tol(p, "membership_tol")
    _add_output(p)
    p.set_defaults(handler=BornRuleCLI.valid_state)
    p = sub.add_parser("valid-effect", help="Is r a row of some physical measurement?")
    p.add_argument("-r", required=True, metavar="FILE", help="Row file {\"r\": [...]}")
    _add_sic(p)
    _add_tol(p, "membership_tol")
    _add_output(p)
    p.set_defaults(handler=BornRuleCLI.valid_effect)
    p = sub.add_parser("linear-extend", help="Certify an additive function as linear")
    p.add_argument("--samples", required=True, metavar="FILE", help="Samples file {\"samples\": [...]}")
    _add_tol(p, "extension_tol")
    _add_output(p)
    p.set_defaults(handler=BornRuleCLI.linear_extend)

    # coherence
    coh = sub.add_parser("coherence", help="Dutch-book coherence checks")
    coh_sub = coh.add_subparsers(dest="action", required=True)
    p = coh_sub.add_parser("prices", help="Range and complement checks on declared prices")
    p.add_argument("--prices", required=True, metavar="FILE", help="Prices file {\"prices\": {...}}")
    _add_stake(p)
    _add_output(p)
    p.set_defaults(handler=BornRuleCLI.coherence_prices)
    p = coh_sub.add_parser("additivity", help="p(E or F) = p(E) + p(F)")
    p.add_argument("--pE", type=float, required=True)
    p.add_argument("--pF", type=float, required=True)
    p.add_argument("--pEorF", type=float, required=True)
    _add_stake(p)
    _add_output(p)
    p.set_defaults(handler=BornRuleCLI.coherence_additivity)
    p = coh_sub.add_parser("conditional", help="p(E and F) = p(E) p(F|E)")
    p.add_argument("--pE", type=float, required=True)
    p.add_argument("--pFgivenE", type=float, required=True)
    p.add_argument("--pEandF", type=float, required=True)
    _add_stake(p)
    _add_output(p)
    p.set_defaults(handler=BornRuleCLI.coherence_conditional)
    p = coh_sub.add_parser("born", help="Declared q against the Born rule")
    _add_p_R(p)
    p.add_argument("-q", required=True, metavar="FILE", help="Declared q file {\"p\": [...]}")
    p.add_argument("-d", type=int, required=True, help="Hilbert-space dimension")
    _add_tol(p, "born_coherence_tol")
    _add_stake(p)
    _add_output(p)
    p.set_defaults(handler=BornRuleCLI.coherence_born)

    # sim
    sim = sub.add_parser("sim", help="Seeded Monte-Carlo experiments")
    sim_sub = sim.add_subparsers(dest="action", required=True)
    p = sim_sub.add_parser("one", help="Experiment One: j ~ q")
    p.add_argument("-q", required=True, metavar="FILE", help="OutcomeDist file {\"p\": [...]}")
    _add_run(p)
    _add_output(p)
    p.set_defaults(handler=BornRuleCLI.sim_one)
    p = sim_sub.add_parser("two", help="Experiment Two: i ~ p, then j ~ R(.|i)")
    _add_p_R(p)
    _add_run(p)
    p.add_argument("--margin", action="store_true", help="Report the j-marginal against LTP and Born (needs -d)")
    p.add_argument("-d", type=int, help="Hilbert-space dimension (for --margin)")
    _add_output(p)
    p.set_defaults(handler=BornRuleCLI.sim_two)
    p = sim_sub.add_parser("compare", help="max_j |frequency - prediction|")
    p.add_argument("--counts", required=True, metavar="FILE", help="CountTable file (Experiment Two tables use their j-marginal)")
    p.add_argument("-q", required=True, metavar="FILE", help="Predicted OutcomeDist file")
    _add_output(p)
    p.set_defaults(handler=BornRuleCLI.sim_compare)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Main CLI entry point; returns the exit code."""
    parser = build_parser()
    args = parser.parse_args(argv)

    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)

    cli = BornRuleCLI(config=ToleranceConfigManager(args.config) if args.config else None)
    logger.debug("Dispatching %s %s", args.command, getattr(args, "action", ""))
    try:
        return args.handler(cli, args)
    except FileFormatError as e:
        cli.print_error(str(e))
        return EXIT_IO
    except ConvergenceError as e:
        cli.print_error(f"{e} (best error {e.best_error:.3g})")
        return EXIT_INVALID
    except ValueError as e:
        # ValidationError, DimensionError, SpanError and InconsistencyError land here
        cli.print_error(str(e))
        return EXIT_INVALID
    except Exception as e:
        cli.print_error(f"CLI operation failed: {e}")
        if args.verbose:
            import traceback
            traceback.print_exc()
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
