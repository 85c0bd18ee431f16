import json
import os
from abc import ABC, abstractmethod
from typing import Generic, TypeVar, Union

# representation written to disk
T = TypeVar('T', str, dict, list)

S = TypeVar('S', bound='Serializable')
SS = TypeVar('SS', bound='StrSerializable')
JS = TypeVar('JS', bound='JSONSerializable')


class Serializable(ABC, Generic[T, S]):
    """
    Data file of farekit: a biquandle table, a diagram, a fare table or the catalog index.
    Subclasses choose the on-disk representation and the file extension.
    """

    serializer_extension: str = 'dat'

    @abstractmethod
    def _serialize(self) -> T:
        ...

    @classmethod
    @abstractmethod
    def _deserialize(cls, representation: T) -> S:
        """
        :raises MalformedTableError, DiagramParseError, FareParseError: on malformed input
        """
        ...

    @classmethod
    def path_in(cls, folder_path: str, file_name: str) -> str:
        return os.path.join(folder_path, f'{file_name}.{cls.serializer_extension}')

    @classmethod
    def load(cls, folder_path: str, file_name: str) -> S:
        """
        Reads `file_name` plus the class extension from the folder
        """
        return cls.load_file(cls.path_in(folder_path, file_name))

    @classmethod
    @abstractmethod
    def load_file(cls, path: str) -> S:
        ...

    def dump(self, folder_path: str, file_name: str) -> None:
        self.dump_file(self.path_in(folder_path, file_name))

    @abstractmethod
    def dump_file(self, path: str) -> None:
        ...


class StrSerializable(Serializable[str, SS], ABC, Generic[SS]):
    """
    Line-oriented text formats
    """

    @classmethod
    def loads(cls, text: str) -> SS:
        return cls._deserialize(text)

    def dumps(self) -> str:
        return self._serialize()

    @classmethod
    def load_file(cls, path: str) -> SS:
        with open(path, 'r', encoding='utf-8') as f:
            return cls._deserialize(f.read())

    def dump_file(self, path: str) -> None:
        with open(path, 'w', encoding='utf-8') as f:
            f.write(self._serialize())


class JSONSerializable(Serializable[dict[str, Union[dict, list, str, int, bool, None]], JS], ABC, Generic[JS]):
    serializer_extension: str = 'json'

    @classmethod
    def load_file(cls, path: str) -> JS:
        with open(path, 'r', encoding='utf-8') as f:
            return cls._deserialize(json.load(f))

    def dump_file(self, path: str) -> None:
        with open(path, 'w', encoding='utf-8') as f:
            json.dump(self._serialize(), f, indent=2, sort_keys=True)
