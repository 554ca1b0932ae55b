"""
Verification manager running the exact acceptance suites for one (n, q)
"""
import logging
import random
import time
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional

from classification.classes import (
    b_invariants,
    class_of,
    class_representative,
    class_size,
    count_classes_by_strings,
    count_classes_recursive,
    enumerate_classes,
    named_invariants,
)
from classification.orbits import (
    classify,
    count_for_partition,
    count_partitions_even_odd,
    count_partitions_even_odd_direct,
    counts_by_dimension,
    enumerate_descriptors,
    enumerated_counts_by_dimension,
    representative,
)
from classification.partitions import (
    PartitionType,
    all_compositions,
    all_flocks,
    compositions_with_parts,
    container_of_flock,
    count_all_odd,
    count_ones_twos,
    fibonacci,
    has_type,
    q_even,
    q_odd,
    sparse_sequences,
)
from config.run_config import RunConfig
from models.errors import InvalidStabCharacter
from models.field import PrimeField
from models.group import enumerate_group, group_order
from oracle.brute_force import brute_coadjoint_orbits, brute_conjugacy_classes, brute_induce, brute_orbit_character
from representations.gelfand_model import (
    StabCharacter,
    assign_characters,
    induced_value,
    mutate_assignment,
    verify_model,
)
from representations.orbit_method import (
    CharacterTable,
    character_table,
    completeness_check,
    irreducible_rep_matrix,
    irreducible_value,
    orthogonality_report,
)

logger = logging.getLogger(__name__)

# Container diagrams of the flock correspondence for n = 6 and n = 7
CONTAINER_DIAGRAMS: Dict[int, Dict[PartitionType, List[str]]] = {
    6: {
        PartitionType.ODD: ["C(1,4,6)", "C(1,3,6)", "C(1,3,5)", "C(1,3)", "C(1,4)", "C(1,5)", "C(1,6)", "C(1)"],
        PartitionType.EVEN: ["C(2,4,6)", "C(4,6)", "C(3,5)", "C(2,4)", "C(3,6)", "C(2,6)", "C(2,5)",
                             "C(2)", "C(3)", "C(4)", "C(5)", "C(6)", "C()"],
    },
    7: {
        PartitionType.ODD: ["C(1,3,5,7)", "C(1,3,5)", "C(1,4,7)", "C(1,3,7)", "C(1,3,6)", "C(1,3)", "C(1,4)",
                            "C(1,5)", "C(1,6)", "C(1,7)", "C(1)", "C(1,4,6)", "C(1,5,7)"],
        PartitionType.EVEN: ["C(3,5,7)", "C(2,5,7)", "C(2,4,7)", "C(2,4,6)", "C(5,7)", "C(4,6)", "C(3,5)",
                             "C(2,4)", "C(4,7)", "C(3,7)", "C(2,7)", "C(2,6)", "C(2,5)", "C(2)", "C(3)",
                             "C(4)", "C(5)", "C(6)", "C(7)", "C(3,6)", "C()"],
    },
}

QUOTED_TYPE_COUNTS = {1: (1, 1), 2: (2, 1), 3: (3, 2), 4: (6, 3), 5: (11, 6)}


@dataclass
class CheckResult:
    suite: str
    name: str
    passed: bool
    detail: str = ""

    def to_dict(self) -> dict:
        return {"suite": self.suite, "name": self.name, "passed": self.passed, "detail": self.detail}

    def __str__(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        return f"[{mark}] {self.suite}: {self.name}" + (f" ({self.detail})" if self.detail else "")


class VerificationManager:
    """Runs suites of exact checks and keeps their results"""

    SUITES = ("orbits", "classes", "chars", "model", "combinatorics")

    def __init__(self, config: RunConfig):
        self.config = config
        self.n = config.n
        self.q = config.q
        self.results: List[CheckResult] = []
        self.start_real_time = 0.0
        self.finish_real_time = 0.0
        self.suites_run: List[str] = []
        self.rng = random.Random(config.seed)
        self._table: Optional[CharacterTable] = None

    # Bookkeeping

    def record(self, suite: str, name: str, passed: bool, detail: str = "") -> CheckResult:
        result = CheckResult(suite, name, bool(passed), detail)
        self.results.append(result)
        if result.passed:
            logger.debug("%s", result)
        else:
            logger.warning("%s", result)
        return result

    def run(self, suite: str = "all") -> bool:
        self.start_real_time = time.time()
        suites = self.SUITES if suite == "all" else (suite,)
        runners: Dict[str, Callable[[], None]] = {
            "orbits": self.run_orbit_suite,
            "classes": self.run_class_suite,
            "chars": self.run_character_suite,
            "model": self.run_model_suite,
            "combinatorics": self.run_combinatorics_suite,
        }
        for name in suites:
            logger.info("running suite %s for n=%d q=%d", name, self.n, self.q)
            runners[name]()
            self.suites_run.append(name)
        self.finish_real_time = time.time()
        return self.passed

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def failures(self) -> List[CheckResult]:
        return [r for r in self.results if not r.passed]

    def character_table(self) -> CharacterTable:
        if self._table is None:
            self._table = character_table(self.n, self.q, self.config.jobs, self.config.max_group_order)
        return self._table

    def _oracle_fits(self) -> bool:
        return self.q ** (3 * self.n - 1) <= self.config.max_oracle_operations

    # Suites

    def run_orbit_suite(self):
        n, q, budget = self.n, self.q, self.config.max_group_order
        suite = "orbits"

        closed = counts_by_dimension(n, q)
        enumerated = enumerated_counts_by_dimension(n, q, budget)
        self.record(suite, "closed-form counts per dimension match enumeration", closed == enumerated,
                    f"closed={closed} enumerated={enumerated}")

        per_partition: Dict = {}
        bad_round_trip = 0
        for d in enumerate_descriptors(n, q, budget):
            per_partition[d.partition] = per_partition.get(d.partition, 0) + 1
            if classify(representative(d)) != d:
                bad_round_trip += 1
        wrong = [str(p) for p, c in per_partition.items() if c != count_for_partition(p, q)]
        self.record(suite, "orbit count per partition is (q-1)^(n-1-m) q^nu", not wrong, ",".join(wrong))
        self.record(suite, "classify(representative(d)) == d", bad_round_trip == 0, f"{bad_round_trip} mismatches")

        mismatched = []
        for mu in range(n // 2 + 1):
            for nu in range(n - 2 * mu, -1, -2):
                if mu + nu and count_partitions_even_odd(n, mu, nu) != count_partitions_even_odd_direct(n, mu, nu):
                    mismatched.append((mu, nu))
        self.record(suite, "even/odd part counts match composition enumeration", not mismatched, str(mismatched))

        if self._oracle_fits():
            orbits = brute_coadjoint_orbits(n, q, self.config.max_oracle_operations)
            blocks = orbits.blocks()
            descriptors = {}
            consistent = True
            for name, block in blocks.items():
                labels = {classify(F) for F in block}
                if len(labels) != 1:
                    consistent = False
                descriptors[name] = labels.pop()
            distinct = len(set(descriptors.values())) == len(descriptors)
            self.record(suite, "descriptors are constant on brute-force orbits", consistent)
            self.record(suite, "descriptors separate brute-force orbits", distinct)
            census: Dict[int, int] = {}
            for label in descriptors.values():
                census[label.dimension] = census.get(label.dimension, 0) + 1
            self.record(suite, "brute-force orbit census matches closed form", census == closed, str(census))
            sizes_ok = all(q ** (2 * descriptors[name].k) == len(block) for name, block in blocks.items())
            self.record(suite, "orbit sizes are q^dim", sizes_ok)
        else:
            self.record(suite, "brute-force orbit oracle", True, "skipped: over oracle budget")

    def run_class_suite(self):
        n, q, budget = self.n, self.q, self.config.max_group_order
        suite = "classes"

        classes = list(enumerate_classes(n, q, budget))
        orbit_total = sum(counts_by_dimension(n, q).values())
        self.record(suite, "class count equals orbit count", len(classes) == orbit_total,
                    f"classes={len(classes)} orbits={orbit_total}")
        self.record(suite, "class sizes sum to |G|", sum(class_size(c) for c in classes) == group_order(n, q))

        strings = count_classes_by_strings(n, q, self.config.max_dot_strings)
        by_dimension: Dict[int, int] = {}
        for c in classes:
            k = n - 1 - len(b_invariants(class_representative(c)))
            by_dimension[k] = by_dimension.get(k, 0) + 1
        self.record(suite, "dot-string table matches class enumeration",
                    all(strings.total(k) == by_dimension.get(k, 0) for k in range(n)), str(strings.totals()))
        if n >= 2:
            recursive = count_classes_recursive(n, q)
            self.record(suite, "recursion matches dot-string sum", recursive == strings)

        if self._oracle_fits():
            partition = brute_conjugacy_classes(n, q, self.config.max_oracle_operations)
            labels = {}
            invariant_labels = {}
            consistent = True
            for name, block in partition.blocks().items():
                found = {class_of(g) for g in block}
                named = {(tuple(g.alpha), tuple(named_invariants(g))) for g in block}
                consistent = consistent and len(found) == 1 and len(named) == 1
                labels[name] = found.pop()
                invariant_labels[name] = named.pop()
                if class_size(labels[name]) != len(block):
                    consistent = False
            self.record(suite, "class_of and named invariants are constant on brute-force classes", consistent)
            self.record(suite, "class_of separates brute-force classes", len(set(labels.values())) == len(labels))
            self.record(suite, "named invariants separate brute-force classes",
                        len(set(invariant_labels.values())) == len(invariant_labels))
        else:
            self.record(suite, "brute-force class oracle", True, "skipped: over oracle budget")

    def _pairs(self, elements: List) -> List:
        samples = self.config.homomorphism_samples
        if len(elements) ** 2 <= 2 * samples:
            return [(g, h) for g in elements for h in elements]
        return [(self.rng.choice(elements), self.rng.choice(elements)) for _ in range(samples)]

    def run_character_suite(self):
        n, q = self.n, self.q
        suite = "chars"

        completeness = completeness_check(n, q)
        self.record(suite, "sum of squared dimensions is q^(2n-1)", completeness.passed,
                    str(completeness.get_report_summary()))

        table = self.character_table()
        report = orthogonality_report(table)
        self.record(suite, "row orthogonality", not report.row_failures, f"{len(report.row_failures)} failures")
        self.record(suite, "column orthogonality", not report.column_failures,
                    f"{len(report.column_failures)} failures")
        dims = table.dimensions()
        self.record(suite, "irreducible dimensions are q^k",
                    all(d == q ** descriptor.k for d, descriptor in zip(dims, table.descriptors)))

        elements = list(enumerate_group(n, q, self.config.max_group_order))
        pairs = self._pairs(elements)
        trace_bad = 0
        hom_bad = 0
        for descriptor in table.descriptors:
            matrices: Dict = {g: irreducible_rep_matrix(descriptor, g) for g in elements}
            for g, m in matrices.items():
                if m.trace() != irreducible_value(descriptor, g):
                    trace_bad += 1
            for g, h in pairs:
                if matrices[g] @ matrices[h] != matrices[g * h]:
                    hom_bad += 1
        self.record(suite, "trace of representation matrices equals closed-form character", trace_bad == 0,
                    f"{trace_bad} mismatches")
        self.record(suite, "representation matrices are homomorphisms", hom_bad == 0,
                    f"{hom_bad} failures over {len(pairs)} pairs per irreducible")

        if self._oracle_fits():
            orbits = brute_coadjoint_orbits(n, q, self.config.max_oracle_operations)
            reps = [class_representative(c) for c in table.classes]
            bad = 0
            for block in orbits.blocks().values():
                descriptor = classify(block[0])
                brute = brute_orbit_character(block, reps)
                bad += sum(1 for g in reps if brute[g] != irreducible_value(descriptor, g))
            self.record(suite, "orbit sums reproduce the irreducible characters", bad == 0, f"{bad} mismatches")

    def run_model_suite(self):
        n, q = self.n, self.q
        suite = "model"

        assignment = assign_characters(n, q, self.config.max_group_order)
        containers = assignment.containers
        self.record(suite, "number of containers is F_(n+2)", len(containers) == fibonacci(n + 2))
        counts_ok = all(len(c.classes) == c.expected_class_count() for c in containers)
        sizes_ok = all(class_size(d) == c.class_size() for c in containers for d in c.classes)
        invariants_ok = all(
            len(b_invariants(class_representative(d))) == len(c.iplus) - 1 for c in containers for d in c.classes
        )
        self.record(suite, "classes per container are (q-1)^|I| q^(|I+|-1)", counts_ok)
        self.record(suite, "class sizes in a container are q^|I-|", sizes_ok)
        self.record(suite, "classes in a container carry |I+|-1 b-invariants", invariants_ok)

        elements = list(enumerate_group(n, q, self.config.max_group_order))
        stab_ok = all(
            sum(1 for g in elements if c.in_stabilizer(g)) == c.stabilizer_order() for c in containers
        )
        self.record(suite, "stabilizer orders are q^(n-1+|I+|)", stab_ok)

        table = self.character_table()
        report = verify_model(n, q, assignment, table, self.config.jobs, self.config.max_group_order)
        self.record(suite, "every irreducible occurs exactly once in the model", report.passed,
                    str(report.get_report_summary()["deviations"]))

        self._check_induction(assignment, table)

        keys = [k for k, chi in assignment.characters.items() if any(chi.A) or any(chi.B)]
        if keys:
            mutated = mutate_assignment(assignment, keys[0])
            broken = verify_model(n, q, mutated, table, self.config.jobs, self.config.max_group_order)
            self.record(suite, "replacing one stabilizer character breaks multiplicity one", not broken.passed)

        guarded = next((c for c in containers if c.iminus), None)
        if guarded is not None:
            f = PrimeField(q)
            A = [f.zero()] * n
            A[guarded.iminus[0] - 1] = f.one()
            try:
                StabCharacter(guarded.indices, tuple(A), f.zeros(n - 1))
                raised = False
            except InvalidStabCharacter:
                raised = True
            self.record(suite, "A nonzero on I- is rejected", raised)

    def _check_induction(self, assignment, table: CharacterTable):
        """Closed-form induction against the Frobenius sum on a few assigned characters per container"""
        n, q = self.n, self.q
        order = group_order(n, q)
        reps = [class_representative(c) for c in table.classes]
        if order * (len(reps) + 1) > self.config.max_oracle_operations:
            self.record("model", "closed-form induction matches Frobenius sum", True, "skipped: over oracle budget")
            return
        by_container: Dict = {}
        for (indices, _), chi in assignment.characters.items():
            by_container.setdefault(indices, []).append(chi)
        bad = 0
        checked = 0
        for container in assignment.containers:
            chosen = by_container.get(container.indices, [])
            sample = self.rng.sample(chosen, min(2, len(chosen)))
            for chi in sample:
                brute = brute_induce(n, q, container.in_stabilizer, chi.value, reps,
                                     self.config.max_oracle_operations)
                bad += sum(1 for g in reps if brute[g] != induced_value(chi, g))
                checked += 1
        self.record("model", "closed-form induction matches Frobenius sum", bad == 0,
                    f"{checked} characters, {bad} mismatches")

    def run_combinatorics_suite(self):
        suite = "combinatorics"
        top = max(self.n, 16)

        type_bad = []
        for m in range(1, top + 1):
            compositions = all_compositions(m)
            even = sum(1 for c in compositions if has_type(c, PartitionType.EVEN))
            odd = sum(1 for c in compositions if has_type(c, PartitionType.ODD))
            if (even, odd) != (q_even(m), q_odd(m)) or q_even(m) != q_odd(m + 1):
                type_bad.append(m)
        self.record(suite, "even/odd type counts match closed forms", not type_bad, str(type_bad))
        quoted = all((q_even(m), q_odd(m)) == v for m, v in QUOTED_TYPE_COUNTS.items())
        self.record(suite, "type count table for n = 1..5", quoted)

        fib_bad = []
        for m in range(1, max(self.n, 20) + 1):
            ones_twos = sum(1 for _ in compositions_with_parts(m, lambda j: j <= 2))
            all_odd = sum(1 for _ in compositions_with_parts(m, lambda j: j % 2 == 1))
            if ones_twos != count_ones_twos(m) or all_odd != count_all_odd(m):
                fib_bad.append(m)
        self.record(suite, "1/2 and odd-part compositions are Fibonacci numbers", not fib_bad, str(fib_bad))

        sparse_bad = [m for m in range(1, top + 1) if len(sparse_sequences(m)) != fibonacci(m + 2)]
        self.record(suite, "sparse sequences are counted by F_(n+2)", not sparse_bad, str(sparse_bad))

        flock_bad = []
        for m in range(1, min(top, 14) + 1):
            if not self._flocks_partition(m):
                flock_bad.append(m)
        self.record(suite, "flocks partition each type with sizes 2^(k-1)", not flock_bad, str(flock_bad))

        for m, diagrams in CONTAINER_DIAGRAMS.items():
            for kind, expected in diagrams.items():
                found = sorted(container_of_flock(f).label() for f in all_flocks(m, kind))
                self.record(suite, f"n={m} {kind.value} containers", found == sorted(expected),
                            f"{len(found)} containers")

    @staticmethod
    def _flocks_partition(m: int) -> bool:
        for kind, count in ((PartitionType.ODD, fibonacci(m)), (PartitionType.EVEN, fibonacci(m + 1))):
            flocks = all_flocks(m, kind)
            if len(flocks) != count:
                return False
            members = [c for f in flocks for c in f.members()]
            typed = [c for c in all_compositions(m) if has_type(c, kind)]
            if sorted(members) != sorted(typed):
                return False
            for f in flocks:
                size = 2 ** (f.k - 1) if f.k >= 1 else 1
                if len(f.members()) != size or len(f.dotted_dividers) != max(f.k - 1, 0):
                    return False
                if len({c.nu for c in f.members()}) != 1 and not f.head.is_all_ones():
                    return False
            containers = {container_of_flock(f) for f in flocks}
            with_one = all((1 in c) == (kind is PartitionType.ODD) for c in containers)
            if len(containers) != count or not with_one:
                return False
        return True

    # Summaries

    def get_verification_summary(self) -> dict:
        elapsed = (self.finish_real_time or time.time()) - self.start_real_time if self.start_real_time else 0.0
        return {
            "n": self.n,
            "q": self.q,
            "suites": list(self.suites_run),
            "checks_run": len(self.results),
            "failures": [r.to_dict() for r in self.failures],
            "passed": self.passed,
            "elapsed_seconds": round(elapsed, 3),
        }

    def __str__(self) -> str:
        status = "passed" if self.passed else f"{len(self.failures)} failed"
        return f"Verification G_{self.n}(F_{self.q}): {len(self.results)} checks, {status}"
