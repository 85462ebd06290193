"""Corpus harness: generate graph families, run checks on each graph, summarize."""
import logging
from dataclasses import dataclass, field
from fractions import Fraction

from terminaltables import AsciiTable
from tqdm import tqdm

from .checks import GraphContext, resolve_checks, run_check
from .exceptions import ParameterError, SizeCapError
from .generators import FAMILIES, RANDOM_FAMILIES, cycle, generate
from .pattern_check import find_isometric_embedding
from .utils.parallel import parallel_imap

logger = logging.getLogger(__name__)

FAMILY_RANGES = {
    "path": [{"n": n} for n in range(2, 9)],
    "cycle": [{"n": n} for n in range(3, 10)],
    "complete": [{"n": n} for n in range(2, 7)],
    "star": [{"n": n} for n in range(3, 8)],
    "hypercube": [{"dim": k} for k in range(1, 5)],
    "g_p": [{"p": p} for p in range(1, 5)],
    "triangular_grid": [{"n": n} for n in range(2, 7)],
    "ladder": [{"l": l} for l in range(1, 6)],
    "w6pp": [{}],
}

ALIASES = {
    "connected": "random_connected",
    "chordal": "random_chordal",
    "tree": "random_tree",
    "block": "random_block",
}

RANDOM_MIN_VERTICES = 4
RANDOM_MAX_VERTICES = 10


@dataclass(frozen=True)
class CorpusEntry:
    label: str
    graph: object
    family: str = None
    seed: int = None


@dataclass
class EntryOutcome:
    label: str
    results: list
    alpha_index: int
    hyperbolicity_x2: int
    hull_has_isometric_c4: bool = None

    @property
    def failures(self):
        return [r for r in self.results if not r.passed]


@dataclass
class CorpusReport:
    outcomes: list = field(default_factory=list)
    checks: list = field(default_factory=list)

    @property
    def failures(self):
        return [(o.label, r) for o in self.outcomes for r in o.failures]

    @property
    def passed(self):
        return not self.failures

    def counts(self):
        """ check -> [passed, failed, not applicable] """
        table = {name: [0, 0, 0] for name in self.checks}
        for outcome in self.outcomes:
            for r in outcome.results:
                if not r.applicable:
                    table[r.name][2] += 1
                elif r.passed:
                    table[r.name][0] += 1
                else:
                    table[r.name][1] += 1
        return table

    def max_conjecture_ratio(self):
        """ Largest 2 delta / (i + 1) over the corpus, with the graph attaining it first """
        best = None
        for o in self.outcomes:
            if o.alpha_index is None:
                continue
            ratio = Fraction(o.hyperbolicity_x2, o.alpha_index + 1)
            if best is None or ratio > best[0]:
                best = (ratio, o.label)
        return best

    def max_alpha1_hyperbolicity_x2(self):
        values = [o.hyperbolicity_x2 for o in self.outcomes if o.alpha_index is not None and o.alpha_index <= 1]
        return max(values, default=None)

    def alpha1_hull_with_c4(self):
        for o in self.outcomes:
            if o.hull_has_isometric_c4:
                return o.label
        return None

    def as_report(self):
        ratio = self.max_conjecture_ratio()
        return {
            "graphs": len(self.outcomes),
            "checks": {name: {"pass": p, "fail": f, "not_applicable": s}
                       for name, (p, f, s) in self.counts().items()},
            "failures": [{"graph": label, **r.as_report()} for label, r in self.failures],
            "max_conjecture_ratio": None if ratio is None else {
                "value": ratio[0], "graph": ratio[1]},
            "max_alpha1_hyperbolicity_x2": self.max_alpha1_hyperbolicity_x2(),
            "alpha1_hull_with_isometric_c4": self.alpha1_hull_with_c4(),
        }

    def table(self):
        rows = [["Check", "Pass", "Fail", "N/A"]]
        for name, (p, f, s) in self.counts().items():
            rows.append([name, p, f, s])
        return AsciiTable(rows, "Corpus: {} graphs".format(len(self.outcomes))).table


def resolve_families(names):
    """ Family names (or aliases) to canonical names; None selects all """
    if names is None:
        return list(FAMILY_RANGES) + sorted(RANDOM_FAMILIES)
    resolved = []
    for name in names:
        name = ALIASES.get(name, name)
        if name not in FAMILIES:
            raise ParameterError("unknown family '{}'".format(name))
        resolved.append(name)
    return resolved


def _label(family, params, seed=None):
    inner = ", ".join("{}={}".format(k, v) for k, v in params.items())
    if seed is not None:
        inner = "{}, seed={}".format(inner, seed) if inner else "seed={}".format(seed)
    return "{}({})".format(family, inner)


def _random_params(family, seed):
    n = RANDOM_MIN_VERTICES + seed % (RANDOM_MAX_VERTICES - RANDOM_MIN_VERTICES + 1)
    if family == "random_connected":
        top = n * (n - 1) // 2
        return {"n": n, "m": min(top, n - 1 + (7 * seed) % (n + 1))}
    return {"n": n}


def default_corpus(families=None, seeds=20):
    """Fixed-parameter families over their ranges, then `seeds` graphs per random family."""
    entries = []
    for family in resolve_families(families):
        if family in RANDOM_FAMILIES:
            for seed in range(seeds):
                params = _random_params(family, seed)
                entries.append(CorpusEntry(_label(family, params, seed), generate(family, params, seed),
                                           family, seed))
        else:
            for params in FAMILY_RANGES[family]:
                entries.append(CorpusEntry(_label(family, params), generate(family, params), family))
    logger.info("corpus of %d graphs", len(entries))
    return entries


def _hull_c4(ctx):
    if ctx.i > 1 or ctx.hull is None:
        return None
    return find_isometric_embedding(cycle(4), ctx.hull.hull, host_d=ctx.hull_d) is not None


def run_entry(entry, checks):
    ctx = GraphContext(entry.graph, threads=1, label=entry.label)
    results = [run_check(name, ctx) for name in checks]
    try:
        summary = (ctx.i, ctx.delta.doubled, _hull_c4(ctx))
    except SizeCapError as err:
        logger.warning("%s: no invariant summary: %s", entry.label, err)
        summary = (None, None, None)
    return EntryOutcome(entry.label, results, *summary)


def run_corpus(entries, checks=None, threads=None, progress=False):
    """Run checks on every corpus graph; outcomes follow the order of entries.

    Parameters:
    -----------
    entries: list of CorpusEntry
    checks: list of str or None
        Check ids; None runs every registered check.
    threads: int
        Number of graphs processed concurrently.
    progress: bool
        Show a tqdm bar on stderr.
    """
    names = resolve_checks(checks)
    report = CorpusReport(checks=names)
    outcomes = parallel_imap(lambda entry: run_entry(entry, names), entries, threads)
    for outcome in tqdm(outcomes, total=len(entries), desc="corpus", unit="graph", disable=not progress):
        report.outcomes.append(outcome)
    if report.failures:
        label, first = report.failures[0]
        logger.warning("%d failing checks; first: %s on %s", len(report.failures), first.name, label)
    return report
