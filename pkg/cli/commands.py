"""
Subcommand handlers.

Each handler takes the validated options and the run context and returns
``(results, passed)``; ``passed`` is None when the command checks nothing.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from dynamics.chains import ChainHamiltonian
from dynamics.learner import learn_dynamics
from dynamics.lieb_robinson import fit_light_cone, lieb_robinson_profile
from fkn.checks import degree_two_diagnostic, exact_fkn_check, fkn_infty_check
from fkn.dictators import high_level_weight, nearest_dictator
from fkn.sweeps import infty_fkn_sweep, two_norm_fkn_sweep
from influence_kkl.influences import (
    haar_influence,
    influence,
    influence_set,
    influences,
    total_influence,
    variance,
)
from influence_kkl.kkl import (
    anticommuting_kkl_check,
    bad_influence_detect,
    poincare_check,
    talagrand_check,
)
from learning.goldreich_levin import goldreich_levin
from learning.oracle import OracleHandle
from learning.serializers import GoldreichLevinResultSerializer
from noise_hyper.checks import hypercontractivity_check, low_degree_norm_check, rank_bound_check
from noise_hyper.noise import is_completely_positive, noisy_operator
from noise_hyper.search import search_violation
from noise_hyper.sweeps import corollary_sweep, hypercontractivity_sweep
from pauli_core.fourier import fourier_transform
from pauli_core.norms import is_quantum_boolean, parse_exponent
from pauli_core.spectra import spectrum_stats
from property_testing.exact import (
    closeness,
    dictator_test_probability,
    discrimination_probability,
    hastad_test_probability,
    locality_test_probability,
    stabilizer_test_probability,
)
from property_testing.sampling import hastad_test_sample, stabilizer_test_sample
from property_testing.serializers import TestReportSerializer
from property_testing.verdicts import hastad_verdict, stabilizer_verdict
from qbf_build.balancing import balance, spin_flip, spin_flip_all
from qbf_build.constructors import anticommuting_combination, projector_qbf, sign_function
from qbf_build.oracles import TruthTable, bit_oracle, phase_oracle
from qbflab.exceptions import InputFormatError

from .inputs import load_input, write_operator
from .serializers import (
    DynamicsOptionsSerializer,
    GoldreichLevinOptionsSerializer,
    HyperOptionsSerializer,
    PropertyTestOptionsSerializer,
    SearchOptionsSerializer,
    split_list,
)

logger = logging.getLogger(__name__)


@dataclass
class RunContext:
    seed: int
    tol: float
    kind: str | None = None
    inputs: list = field(default_factory=list)

    def load(self, path):
        if not path:
            raise InputFormatError("This command needs --in")
        loaded = load_input(path, self.kind)
        self.inputs.append(loaded)
        return loaded

    def operator(self, path):
        return self.load(path).operator


def first_input(options):
    paths = options.get("input") or [None]
    return paths[0]


def validated(serializer_class, options):
    serializer = serializer_class(data={key: value for key, value in options.items() if value is not None})
    serializer.is_valid(raise_exception=True)
    return serializer.validated_data


def all_passed(reports):
    """False if any report failed, None if none decided, True otherwise."""
    verdicts = [report.passed for report in reports if report.passed is not None]
    if not verdicts:
        return None
    return all(verdicts)


def operator_summary(f):
    return {"n": f.n, "hermitian": f.hermitian, "quantum_boolean": is_quantum_boolean(f), "spectrum": fourier_transform(f)}


def spectrum_command(options, context):
    spec = fourier_transform(context.operator(first_input(options)))
    return {"spectrum": spec, "stats": spectrum_stats(spec)}, None


def build_command(options, context):
    construction = options["construction"]
    paths = options.get("input") or [None]
    if construction in ("phase", "bit"):
        loaded = context.load(paths[0])
        if loaded.table is None:
            raise InputFormatError(f"'{construction}' needs a truth table input")
        table: TruthTable = loaded.table
        f = phase_oracle(table) if construction == "phase" else bit_oracle(table)
    elif construction == "projector":
        f = projector_qbf(context.operator(paths[0]), context.tol)
    elif construction == "sign":
        f = sign_function(context.operator(paths[0]))
    elif construction == "balance":
        f = balance(context.operator(paths[0]))
    elif construction == "spin-flip":
        g = context.operator(paths[0])
        f = spin_flip(g, options["qubit"]) if options.get("qubit") is not None else spin_flip_all(g)
    else:
        alphas = split_list(options.get("alphas"), float)
        fs = [context.operator(path) for path in paths]
        if len(alphas) != len(fs):
            raise InputFormatError(f"Got {len(alphas)} alphas for {len(fs)} operators")
        f = anticommuting_combination(alphas, fs, context.tol)

    if options.get("write"):
        write_operator(options["write"], f)
    return {"construction": construction, "operator": operator_summary(f), "written_to": options.get("write")}, None


def test_command(options, context):
    name = options["test"]
    values = validated(PropertyTestOptionsSerializer, options)
    f = context.operator(first_input(options))
    trials, epsilon, delta = values.get("trials"), values.get("epsilon"), values.get("delta")
    results = {"test": name}
    passed = None

    if name == "stabilizer":
        results["exact_probability"] = stabilizer_test_probability(f)
        if trials:
            sample = stabilizer_test_sample(f, trials, context.seed, epsilon)
            results["sample"] = TestReportSerializer(sample).data
            passed = sample.sample_is_consistent()
        if epsilon is not None:
            results["verdict"] = TestReportSerializer(stabilizer_verdict(f, epsilon, context.tol)).data
    elif name == "hastad":
        delta = 0.1 if delta is None else delta
        results["exact_probability"] = hastad_test_probability(f, delta)
        if trials:
            sample = hastad_test_sample(f, delta, trials, context.seed, epsilon)
            results["sample"] = TestReportSerializer(sample).data
            passed = sample.sample_is_consistent()
        if epsilon is not None:
            results["verdict"] = TestReportSerializer(hastad_verdict(f, epsilon)).data
    elif name == "locality":
        results["exact_probability"] = locality_test_probability(f)
    elif name == "dictator":
        delta = 0.1 if delta is None else delta
        results["exact_probability"] = dictator_test_probability(f, delta)
    else:
        if not options.get("other"):
            raise InputFormatError("'discriminate' needs --other")
        g = context.operator(options["other"])
        results["success_probability"] = discrimination_probability(f, g, values["prior"])
        results["closeness"] = closeness(f, g)
        results["closeness_up_to_phase"] = closeness(f, g, up_to_phase=True)
    return results, passed


def gl_command(options, context):
    values = validated(GoldreichLevinOptionsSerializer, options)
    oracle = OracleHandle(context.operator(first_input(options)), seed=context.seed, exact=values["exact"])
    result = goldreich_levin(oracle, values["gamma"], values["delta"])
    return {"goldreich_levin": GoldreichLevinResultSerializer(result).data}, result.list_bound_respected


def noise_command(options, context):
    epsilon = options.get("epsilon")
    if epsilon is None:
        raise InputFormatError("'noise' needs --epsilon")
    f = context.operator(first_input(options))
    noisy = noisy_operator(f, epsilon)
    if options.get("write"):
        write_operator(options["write"], noisy)
    return {
        "epsilon": epsilon,
        "completely_positive": is_completely_positive(epsilon),
        "spectrum": fourier_transform(noisy),
    }, None


def hyper_command(options, context):
    action = options["action"]
    if action == "search":
        values = validated(SearchOptionsSerializer, options)
        report = search_violation(
            values["p"], values["q"], values["epsilon"], values["n"], values["restarts"], rng=context.seed
        )
        return {"search": report}, report.passed

    if action == "corollaries":
        q = parse_exponent(options["q"]) if options.get("q") else None
        if options.get("input"):
            f = context.operator(first_input(options))
            reports = [low_degree_norm_check(f, q or 4.0, tol=context.tol), rank_bound_check(f, q, context.tol)]
        else:
            reports = [corollary_sweep(rng=context.seed, tol=context.tol)]
        return {report.name: report for report in reports}, all_passed(reports)

    values = validated(HyperOptionsSerializer, options)
    if options.get("input"):
        if values.get("epsilon") is None:
            raise InputFormatError("'hyper check --in' needs --epsilon")
        f = context.operator(first_input(options))
        report = hypercontractivity_check(f, values["p"], values["q"], values["epsilon"], context.tol)
    else:
        grid = values["grid"]
        report = hypercontractivity_sweep(
            [values["p"]],
            [values["q"]],
            [grid["n"]],
            count=grid["count"],
            rng=context.seed,
            epsilon=values.get("epsilon"),
            tol=context.tol,
        )
    return {"hypercontractivity": report}, report.passed


def influence_command(options, context):
    f = context.operator(first_input(options))
    tol = context.tol
    if options.get("qubit") is not None:
        return {"qubit": options["qubit"], "influence": influence(f, options["qubit"])}, None
    if options.get("set"):
        qubits = split_list(options["set"], int)
        return {"qubits": qubits, "influence": influence_set(f, qubits)}, None
    if options.get("bad_influence"):
        report = bad_influence_detect(f, split_list(options["bad_influence"], int), tol)
    elif options.get("haar") is not None:
        report = haar_influence(f, options["haar"], options.get("samples"), rng=context.seed)
    elif options.get("poincare"):
        report = poincare_check(f, tol)
    elif options.get("talagrand"):
        report = talagrand_check(f, tol)
    elif options.get("anticommuting_kkl"):
        report = anticommuting_kkl_check(f, tol)
    else:
        return {"influences": influences(f), "total_influence": total_influence(f), "variance": variance(f)}, None
    return {report.name: report}, report.passed


def fkn_command(options, context):
    tol = context.tol
    if options.get("sweep"):
        reports = [two_norm_fkn_sweep(rng=context.seed, tol=tol), infty_fkn_sweep(rng=context.seed, tol=tol)]
        return {report.name: report for report in reports}, all_passed(reports)

    f = context.operator(first_input(options))
    if options.get("exact"):
        report = exact_fkn_check(f, tol)
        return {report.name: report}, report.passed
    if options.get("infty"):
        if not options.get("g") or options.get("epsilon") is None:
            raise InputFormatError("'fkn --infty' needs --g and --epsilon")
        report = fkn_infty_check(f, context.operator(options["g"]), options["epsilon"], tol)
        return {report.name: report}, report.passed

    diagnostic = degree_two_diagnostic(f, tol)
    results = {
        "high_level_weight": high_level_weight(f),
        "nearest_dictator": nearest_dictator(f, tol),
        diagnostic.name: diagnostic,
    }
    return results, diagnostic.passed


def dynamics_command(options, context):
    values = validated(DynamicsOptionsSerializer, options)
    H = ChainHamiltonian.random(values["n"], context.seed)
    qubit, symbol = values["qubit"], values["symbol"]

    if options["action"] == "learn":
        result = learn_dynamics(
            H, qubit, symbol, values["t"], values["gamma"], values["epsilon"], values["delta"], seed=context.seed
        )
        return {"chain": H, "learning": result}, result.error <= values["epsilon"]

    times = values.get("times") or [values["t"]]
    profiles = [lieb_robinson_profile(H, qubit, symbol, t, values.get("radii")) for t in times]
    rows = [row for profile in profiles for row in profile.values["rows"]]
    results = {
        "chain": H,
        "rows": [{key: row[key] for key in ("time", "radius", "bonds", "discrepancy", "infty_discrepancy")} for row in rows],
        "violations": [violation for profile in profiles for violation in profile.values["violations"]],
        "fit": fit_light_cone(rows),
    }
    return results, None


HANDLERS = {
    "spectrum": spectrum_command,
    "build": build_command,
    "test": test_command,
    "gl": gl_command,
    "noise": noise_command,
    "hyper": hyper_command,
    "influence": influence_command,
    "fkn": fkn_command,
    "dynamics": dynamics_command,
}
