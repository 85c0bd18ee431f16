import pytest

from farekit.catalog.index import load
from farekit.fare.enumeration import satisfies
from farekit.pipeline import InvariantPipeline
from farekit.pipeline.exception import InvariantPipelineError
from farekit.schemas.fare import FareKind


def test_plain_pipeline(swap_biquandle, hopf_complete_fare):
    invariants = InvariantPipeline.create() \
        .biquandle(swap_biquandle) \
        .fare(hopf_complete_fare) \
        .links(['L2a1', load('U2')]) \
        .compute()

    assert [inv.link for inv in invariants] == ['L2a1', 'U2']
    assert invariants[0].colorings == 4
    assert invariants[0].additive == '2+2x^2'
    assert invariants[0].multiplicative == 'x^2(x-2)^2'
    assert invariants[1].multiplicative == 'x^4'


def test_unchecked_pipeline(four_quandle, printed_through_fare):
    pipeline = InvariantPipeline.create() \
        .biquandle(four_quandle) \
        .fare(printed_through_fare) \
        .links(['4_1', '3_1'])

    with pytest.raises(AssertionError):
        pipeline.compute()

    invariants = pipeline.validate(False).compute()
    assert [inv.additive for inv in invariants] == ['4+6x+6x^4', '16']


def test_parallel_links(four_quandle, printed_through_fare):
    pipeline = InvariantPipeline.create() \
        .biquandle(four_quandle) \
        .fare(printed_through_fare) \
        .links(['4_1', '3_1', '4_1_kink']) \
        .validate(False)

    sequential = [inv.multiset for inv in pipeline.compute()]
    parallel = [inv.multiset for inv in pipeline.jobs(2, across_links=True).compute()]
    assert sequential == parallel


def test_fare_from_order_and_kind(three_biquandle):
    invariants = InvariantPipeline.create() \
        .biquandle(three_biquandle) \
        .group('2') \
        .fare((1, FareKind.PLAIN)) \
        .links(['3_1']) \
        .compute()

    # one coloring by 3, two by the swapped pair 1, 2
    assert invariants[0].colorings == 3
    assert invariants[0].multiset.cardinality == 3


def test_first_nonzero_fare_is_a_fare(three_biquandle):
    pipeline = InvariantPipeline.create().biquandle(three_biquandle).group('2').fare((1, FareKind.PLAIN))
    fare = pipeline._resolve_fare()

    assert any(not value.is_zero() for value in fare.values)
    assert satisfies(fare, three_biquandle)


def test_pipeline_errors(swap_biquandle, four_quandle, hopf_complete_fare):
    with pytest.raises(InvariantPipelineError):
        InvariantPipeline.create().fare(hopf_complete_fare).compute()
    with pytest.raises(InvariantPipelineError):
        InvariantPipeline.create().biquandle(swap_biquandle).compute()
    with pytest.raises(InvariantPipelineError):
        InvariantPipeline.create().biquandle(four_quandle).fare(hopf_complete_fare).compute()
    with pytest.raises(InvariantPipelineError):
        InvariantPipeline.create().biquandle(swap_biquandle).fare((2, FareKind.THROUGH)).compute()
    with pytest.raises(InvariantPipelineError):
        InvariantPipeline.create().biquandle(swap_biquandle).group('3').fare(hopf_complete_fare).compute()
    with pytest.raises(InvariantPipelineError):
        InvariantPipeline.create().jobs(0)
