import enum
import logging
from dataclasses import dataclass, field


logger = logging.getLogger(__name__)



class CheckStatus(enum.Enum):
    PASS = 'pass'
    FAIL = 'fail'



@dataclass(frozen=True)
class Check:
    """
    One closed-form prediction compared with a brute-force computation.

    A counterexample is kept only for failed checks; a failure without an explicit
    witness records the two disagreeing values.
    """
    claim: str
    statement: str
    params: dict
    predicted: object
    computed: object
    passed: bool
    counterexample: object = None

    def __post_init__(self):
        if self.passed:
            object.__setattr__(self, 'counterexample', None)
        elif self.counterexample is None:
            object.__setattr__(self, 'counterexample', {'predicted': self.predicted, 'computed': self.computed})

    @property
    def status(self):
        return CheckStatus.PASS if self.passed else CheckStatus.FAIL

    @classmethod
    def equal(cls, claim, statement, params, predicted, computed, counterexample=None):
        return cls(claim, statement, params, predicted, computed, predicted == computed, counterexample)

    @classmethod
    def no_violations(cls, claim, statement, params, violations, counterexample=None):
        """
        A property checked over many cases: predicted 0 violations, computed the number found.
        """
        return cls(claim, statement, params, 0, violations, violations == 0, counterexample)



@dataclass(frozen=True)
class Skip:
    """
    A check left out because its sweep is above the configured cap.
    """
    claim: str
    params: dict
    reason: str



@dataclass
class VerificationReport:
    checks: list = field(default_factory=list)
    skipped: list = field(default_factory=list)

    def add(self, check):
        if not check.passed:
            logger.warning("%s failed for %s: %s", check.claim, check.params, check.counterexample)
        self.checks.append(check)

    def skip(self, claim, params, reason):
        logger.info("%s skipped for %s: %s", claim, params, reason)
        self.skipped.append(Skip(claim, params, reason))

    def extend(self, other):
        for check in other.checks:
            self.add(check)
        self.skipped.extend(other.skipped)

    @property
    def failures(self):
        return [check for check in self.checks if not check.passed]

    @property
    def passed(self):
        return not self.failures

    @property
    def summary(self):
        failed = len(self.failures)
        return {
            'checks': len(self.checks),
            'passed': len(self.checks) - failed,
            'failed': failed,
            'skipped': len(self.skipped),
        }
