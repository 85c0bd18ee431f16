"""
For a handful of small biquandles, compares the number of through, crooked and complete
2-fares and checks whether through + crooked stays inside the complete fares.
Since the complete conditions are the through conditions plus the crooked ones move by move,
the sums stay complete exactly when through and crooked fares coincide; the last column checks that.
"""
import os

from pathos.multiprocessing import ProcessingPool

from farekit.algebra.constructions import alexander_biquandle, conjugation_biquandle, symmetric_group_table
from farekit.fare.decomposition import check_closure, fare_rank_summary
from farekit.schemas.biquandle import FiniteBiquandle
from farekit.schemas.group import CoeffGroup

DATA = os.path.join(os.path.dirname(__file__), 'data')
RESULTS = os.path.join(os.path.dirname(__file__), 'results')

BIQUANDLES = {
    'swap': FiniteBiquandle.load(DATA, 'swap'),
    'three': FiniteBiquandle.load(DATA, 'three'),
    'four': FiniteBiquandle.load(DATA, 'four_quandle'),
    'z6 corrected': FiniteBiquandle.load(DATA, 'z6_corrected'),
    'crooked corrected': FiniteBiquandle.load(DATA, 'crooked_corrected'),
    'alexander(3,2,2)': alexander_biquandle(3, 2, 2),
    'alexander(4,3,1)': alexander_biquandle(4, 3, 1),
    'conjugation(S3)': conjugation_biquandle(symmetric_group_table(3)),
}
GROUPS = ['2', '3', '5', '6', '2x2']


def run_iteration(args) -> str:
    name, spec = args
    biquandle, group = BIQUANDLES[name], CoeffGroup.parse(spec)
    summary = fare_rank_summary(biquandle, group)
    closure = check_closure(biquandle, group)
    coincide = summary.through == summary.crooked == summary.through_plus_crooked
    assert closure.holds == coincide, f'{name} over Z_{group}: closure {closure.holds}, T = K {coincide}'
    return f'| {name} | Z_{group} | {summary.through} | {summary.crooked} | {summary.complete} | ' \
           f'{summary.through_plus_crooked} | {summary.decomposable_share:.3f} | {closure.holds} | {coincide} |'


if __name__ == '__main__':
    with ProcessingPool(nodes=4) as p:
        args = [(name, spec) for name in BIQUANDLES for spec in GROUPS]
        measurements = p.map(run_iteration, args)

    os.makedirs(RESULTS, exist_ok=True)
    with open(os.path.join(RESULTS, 'closure_report.md'), 'w') as f:
        f.write('| biquandle | group | through | crooked | complete | through + crooked | share | closed '
                '| through = crooked |\n')
        f.write('|---|---|---|---|---|---|---|---|---|\n')
        f.write('\n'.join(measurements) + '\n')
