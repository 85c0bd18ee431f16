from enum import Enum

from farekit.pipeline.base import FarePipeline
from farekit.pipeline.default import DefaultFarePipeline
from farekit.pipeline.exception import InvariantPipelineError


class PipelineType(Enum):
    DEFAULT = 0


class InvariantPipeline:
    @staticmethod
    def create(pipeline_type: PipelineType = PipelineType.DEFAULT) -> FarePipeline:
        match pipeline_type:
            case PipelineType.DEFAULT:
                return DefaultFarePipeline()
            case _:
                raise InvariantPipelineError('Unknown pipeline type')
