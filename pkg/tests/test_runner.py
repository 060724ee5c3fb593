"""
 ┌─────────────────────────────────────┐
 │          TEST_RUNNER                │
 └─────────────────────────────────────┘
 Run the simulator test suites

 Usage:
 - python run_tests.py                      all suites
 - python run_tests.py --quick              skip the slow suites
 - python run_tests.py --suite engine       one suite
 - python run_tests.py --suite engine --test "replay is bit identical"
"""

import argparse
import json
import os
import sys
import time
import traceback
from datetime import datetime
from typing import Any, Dict, List, Optional, Sequence, Type

# Add parent directory to path for imports
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from .base_test import BaseTest, TestSuite, display_name
from .test_radio import RadioTests
from .test_topology import TopologyTests
from .test_election import ElectionTests
from .test_engine import EngineTests
from .test_metrics import MetricsTests
from .test_cli import CliTests
from .test_experiments import ExperimentTests
from .test_acceptance import AcceptanceTests

SUITES: Dict[str, Type[BaseTest]] = {
    'radio': RadioTests,
    'topology': TopologyTests,
    'election': ElectionTests,
    'engine': EngineTests,
    'metrics': MetricsTests,
    'cli': CliTests,
    'experiments': ExperimentTests,
    'acceptance': AcceptanceTests
}

# Suites skipped by --quick
SLOW_SUITES = ['acceptance']

RULE = "=" * 80


class TestRunner:
    """
     ┌─────────────────────────────────────┐
     │         TESTRUNNER                  │
     └─────────────────────────────────────┘
     Run suites by name and summarize the results
    """
    __test__ = False

    def __init__(self, suites: Optional[Dict[str, Type[BaseTest]]] = None):
        self.test_classes = dict(suites or SUITES)
        self.results: List[TestSuite] = []

    def _unknown(self, suite_name: str) -> bool:
        if suite_name in self.test_classes:
            return False
        print(f"❌ Unknown test suite: {suite_name}")
        print(f"Available suites: {', '.join(self.test_classes)}")
        return True

    def run_suite(self, suite_name: str) -> Optional[TestSuite]:
        """Run one suite; None when it is unknown or crashed outside a test"""
        if self._unknown(suite_name):
            return None
        print(f"\n🚀 Starting {suite_name} tests...")
        instance = self.test_classes[suite_name]()
        try:
            suite = instance.run_all()
        except Exception as e:
            print(f"💥 Error running {suite_name}: {e}")
            traceback.print_exc()
            return None
        instance.print_summary()
        return suite

    def run_all(self, exclude: Sequence[str] = ()) -> Dict[str, Any]:
        """Run every suite not in exclude and print the overall summary"""
        started = time.perf_counter()
        print(f"\n{RULE}\n🧪 WSN Clustering Simulator - Test Suite")
        print(f"Started at: {datetime.now():%Y-%m-%d %H:%M:%S}\n{RULE}")

        for suite_name in self.test_classes:
            if suite_name in exclude:
                print(f"\n⏭️  Skipping {suite_name} tests (excluded)")
                continue
            suite = self.run_suite(suite_name)
            if suite is not None:
                self.results.append(suite)

        summary = self.summarize(time.perf_counter() - started)
        self.print_final_summary(summary)
        return summary

    def run_specific(self, suite_name: str, test_name: str) -> bool:
        """Run a single test, named as in the report ('replay is bit identical')"""
        if self._unknown(suite_name):
            return False
        instance = self.test_classes[suite_name]()
        method_name = f"test_{test_name.strip().replace(' ', '_').lower()}"
        if method_name not in instance.collect_tests():
            print(f"❌ Test '{test_name}' not found in {suite_name}")
            print(f"Available tests: {', '.join(display_name(m) for m in instance.collect_tests())}")
            return False

        instance.setup()
        try:
            result = instance.run_test(getattr(instance, method_name), test_name)
        finally:
            instance.teardown()

        print(f"\n{'=' * 60}\nTest: {test_name}\nStatus: {result.status.value}")
        print(f"Duration: {result.duration:.3f}s")
        if result.message:
            print(f"Message: {result.message}")
        if result.details:
            print(f"Details: {json.dumps(result.details, indent=2, default=str)}")
        return result.ok

    def summarize(self, duration: float) -> Dict[str, Any]:
        suites = [
            {
                'name': s.name,
                'total': s.total,
                'passed': s.passed,
                'failed': s.failed,
                'errors': s.errors,
                'success_rate': s.success_rate,
                'duration': s.duration
            }
            for s in self.results
        ]
        totals = {key: sum(s[key] for s in suites) for key in ('total', 'passed', 'failed', 'errors')}
        return {
            'total_suites': len(suites),
            'total_tests': totals['total'],
            'passed': totals['passed'],
            'failed': totals['failed'],
            'errors': totals['errors'],
            'skipped': sum(s.skipped for s in self.results),
            'success_rate': 100.0 * totals['passed'] / totals['total'] if totals['total'] else 0.0,
            'duration': duration,
            'suites': suites
        }

    def print_final_summary(self, summary: Dict[str, Any]):
        print(f"\n{RULE}\n🏁 FINAL TEST SUMMARY\n{RULE}")
        print(f"Suites: {summary['total_suites']} | Tests: {summary['total_tests']} | "
              f"✅ {summary['passed']} | ❌ {summary['failed']} | 💥 {summary['errors']} | "
              f"⏭️  {summary['skipped']}")
        print(f"Success Rate: {summary['success_rate']:.1f}% | Duration: {summary['duration']:.3f}s")

        for suite in summary['suites']:
            print(f"\n{suite['name']}: {suite['passed']}/{suite['total']} passed, "
                  f"{suite['failed']} failed, {suite['errors']} errors ({suite['duration']:.3f}s)")

        print(f"\n{RULE}")
        if passed(summary):
            print("✅ ALL TESTS PASSED! 🎉")
        else:
            print("❌ SOME TESTS FAILED - Please review the results above")
        print(RULE)


def passed(summary: Dict[str, Any]) -> bool:
    return summary['failed'] == 0 and summary['errors'] == 0


def main(argv: Optional[List[str]] = None) -> int:
    parser = argparse.ArgumentParser(description='Run the WSN clustering simulator tests')
    parser.add_argument('--suite', choices=sorted(SUITES), help='run one suite')
    parser.add_argument('--test', help='run one test of --suite, e.g. "replay is bit identical"')
    parser.add_argument('--quick', action='store_true', help=f"skip {', '.join(SLOW_SUITES)}")
    args = parser.parse_args(argv)
    if args.test and not args.suite:
        parser.error('--test requires --suite')

    runner = TestRunner()
    if args.suite and args.test:
        return 0 if runner.run_specific(args.suite, args.test) else 1
    if args.suite:
        suite = runner.run_suite(args.suite)
        return 0 if suite is not None and suite.failed == 0 and suite.errors == 0 else 1

    summary = runner.run_all(exclude=SLOW_SUITES if args.quick else ())
    return 0 if passed(summary) else 1


if __name__ == "__main__":
    sys.exit(main())
