"""
Checking against the reference tables
=====================================

Compare the tabulation with the shipped reference fixture, one crossing
number at a time.
"""
from twobridge import load_reference_fixture, tabulate_range, verify_fixture

fixture = load_reference_fixture()
rows = tabulate_range(11)

report = verify_fixture(rows, fixture)
print(report.summary())
for line in report.discrepancies:
    print(line)

# Up to nine crossings everything agrees
print(verify_fixture(tabulate_range(9), fixture).summary())
