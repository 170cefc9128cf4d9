import os
import sys
import threading

from dotenv import load_dotenv
from pydantic import BaseModel

# Carregar variáveis do arquivo .env, se existir
load_dotenv()


class Settings(BaseModel):
    log_level: str = "INFO"
    check_seed: int = 1729
    recursion_limit: int = 20000
    thread_stack_size: int = 128 * 1024 * 1024
    api_host: str = "0.0.0.0"
    api_port: int = 8000


settings = Settings(
    log_level=os.environ.get("LOG_LEVEL", "INFO"),
    check_seed=int(os.environ.get("CHECK_SEED", "1729")),
    recursion_limit=int(os.environ.get("RECURSION_LIMIT", "20000")),
    thread_stack_size=int(os.environ.get("THREAD_STACK_SIZE", str(128 * 1024 * 1024))),
    api_host=os.environ.get("API_HOST", "0.0.0.0"),
    api_port=int(os.environ.get("API_PORT", "8000")),
)

# As definições seguem as cláusulas recursivas; listas de 1000 elementos
# passam do limite padrão do interpretador
if sys.getrecursionlimit() < settings.recursion_limit:
    sys.setrecursionlimit(settings.recursion_limit)

# O limite acima só é seguro com pilha nativa suficiente. Vale para as
# threads criadas daqui em diante: a CLI e as rotas rodam o trabalho nelas.
threading.stack_size(settings.thread_stack_size)
