"""
Módulo de configuración del toolkit de multicomplejos.
Gestiona los límites de recursos y parámetros por defecto del sistema.
"""

# Representación de infinito en JSON y en texto
INF_TOKEN = "inf"

# Límite de exponentes (los exponentes se asumen en palabra de máquina)
EXPONENT_CAP = 2 ** 32

# Límites de recursos por defecto
DEFAULT_CANDIDATE_CAP = 10 ** 7  # candidatos de 𝓑 al enumerar facetas
DEFAULT_GENERATOR_CAP = 20  # generadores para inclusión-exclusión / lcm
DEFAULT_BOX_CAP = 10 ** 6  # puntos de la caja del poset característico
DEFAULT_SPLIT_CAP = 10 ** 6  # intervalos producidos por split_to_stanley
DEFAULT_NODE_CAP = 10 ** 7  # nodos de búsqueda del solver de sdepth
DEFAULT_MATRIX_CAP = 2000  # filas/columnas de matrices de borde

# Cuerpo de coeficientes por defecto ("q" = racionales, "fp:<p>" = GF(p))
DEFAULT_FIELD = "q"

# Configuraciones del corpus aleatorio
DEFAULT_SEED = 0
DEFAULT_CORPUS_SIZE = 200
DEFAULT_MAX_N = 4
DEFAULT_MAX_EXP = 3
DEFAULT_MAX_GENS = 6
DEFAULT_CORPUS_NODE_CAP = 200_000  # presupuesto del solver por ideal del corpus

# Formato de log (mismo estilo "[Componente] mensaje")
LOG_FORMAT = "[%(name)s] %(message)s"

__all__ = [
    'INF_TOKEN',
    'EXPONENT_CAP',
    'DEFAULT_CANDIDATE_CAP',
    'DEFAULT_GENERATOR_CAP',
    'DEFAULT_BOX_CAP',
    'DEFAULT_SPLIT_CAP',
    'DEFAULT_NODE_CAP',
    'DEFAULT_MATRIX_CAP',
    'DEFAULT_FIELD',
    'DEFAULT_SEED',
    'DEFAULT_CORPUS_SIZE',
    'DEFAULT_MAX_N',
    'DEFAULT_MAX_EXP',
    'DEFAULT_MAX_GENS',
    'DEFAULT_CORPUS_NODE_CAP',
    'LOG_FORMAT'
]
