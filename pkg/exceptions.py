"""
Exceptions - petpatch
Hierarquia de erros do sistema; cada família mapeia para um código de saída da CLI
"""


class PetpatchError(Exception):
    """Erro base do petpatch"""

    exit_code = 1


class PreconditionError(PetpatchError, ValueError):
    """Pré-condição matemática violada (código de saída 3)"""

    exit_code = 3


class ChartMismatchError(PreconditionError):
    """Operandos definidos sobre cartas diferentes"""


class DegenerateInputError(PreconditionError):
    """Entrada degenerada, por exemplo o polinômio zero"""


class SizeMismatchError(PreconditionError):
    """Permutações ou matrizes de tamanhos diferentes"""


class NotAFixedPointError(PreconditionError):
    """O ponto wB não pertence à variedade"""


class BruhatViolationError(PreconditionError):
    """Desigualdade de Bruhat exigida não vale"""


class CompositionMismatchError(PreconditionError):
    """Composição do elemento de grupo difere da composição de w_P"""


class InvalidHessenbergFunctionError(PreconditionError):
    """Função de Hessenberg inválida"""


class PointNotOnVarietyError(PreconditionError):
    """A origem da carta não está no esquema"""


class InhomogeneousGeneratorError(PreconditionError):
    """Gerador não homogêneo para a graduação pedida"""


class MissingAssignmentError(PreconditionError):
    """Ponto sem valor para alguma variável da carta"""


class InputFormatError(PetpatchError, ValueError):
    """Texto de entrada mal formado (erro de flag, código 2)"""

    exit_code = 2


class PermutationFormatError(InputFormatError):
    """Permutação, composição ou lista numérica mal formada"""


class PolynomialFormatError(InputFormatError):
    """Polinômio em texto mal formado"""


class InternalInconsistencyError(PetpatchError, RuntimeError):
    """Estado que não deveria ocorrer (código de saída 4)"""

    exit_code = 4


class CrossCheckError(InternalInconsistencyError):
    """Veredictos independentes discordam"""
