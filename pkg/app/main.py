import logging

from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware

from app.config import settings

# Configurar logging
logging.basicConfig(level=settings.log_level, format='%(asctime)s - %(name)s - %(levelname)s - %(message)s')

# Importar routers
from app.routers import bench, braun, check, numerals  # noqa: E402
from app.services.costmeter import OPS  # noqa: E402

# Criar aplicação FastAPI
app = FastAPI(
    title="Numerais",
    description="Numerais indutivos (unário, binário, complemento de dois), sequências de Braun e contagem de passos",
    version="0.1.0"
)

# Configurar CORS
app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)

# Incluir routers
app.include_router(numerals.router, prefix="/api/numerals", tags=["Numerals"])
app.include_router(braun.router, prefix="/api/braun", tags=["Braun"])
app.include_router(bench.router, prefix="/api/bench", tags=["Bench"])
app.include_router(check.router, prefix="/api/check", tags=["Check"])


@app.on_event("startup")
async def startup_event():
    """Executado na inicialização do aplicativo"""
    logging.info("Iniciando a aplicação...")
    logging.info(f"{len(OPS)} operações instrumentadas, seed padrão {settings.check_seed}")
    logging.info("Aplicação inicializada com sucesso")


@app.get("/")
async def root():
    return {
        "name": app.title,
        "version": app.version,
        "docs": "/docs",
        "kinds": ["unary", "binary", "twoscomp", "cd"],
    }


@app.get("/health")
async def health():
    return {"status": "ok"}


if __name__ == "__main__":
    import uvicorn
    uvicorn.run("app.main:app", host=settings.api_host, port=settings.api_port, reload=True)
