"""
Main FastAPI application
Maximal clique enumeration service
"""

from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from contextlib import asynccontextmanager
import logging

from app import config
from app.routes import cliques, export, upload
from app.models.database import init_db, close_db

logger = logging.getLogger(__name__)

VERSION = "1.0.0"


@asynccontextmanager
async def lifespan(app: FastAPI):
    """Startup and shutdown events."""
    logger.info(f"Initializing run ledger at {config.DATABASE_URL}")
    init_db()
    yield
    logger.info("Shutting down, closing ledger connections")
    close_db()


app = FastAPI(
    title="Clique Enumerator",
    description="Vertex, edge and hybrid branch-and-bound maximal clique enumeration",
    version=VERSION,
    lifespan=lifespan
)

# CORS Middleware
app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)


# Include routers
app.include_router(cliques.router)
app.include_router(upload.router)
app.include_router(export.router)


@app.get("/health")
async def health_check():
    return {
        "status": "OK",
        "message": "Clique enumerator is running"
    }


@app.get("/")
async def root():
    """API info"""
    return {
        "name": "Clique Enumerator",
        "version": VERSION,
        "default_algorithm": config.DEFAULT_ALGORITHM,
        "default_et": config.DEFAULT_ET,
        "endpoints": {
            "health": "/health",
            "enumerate": "POST /api/cliques/enumerate",
            "stats": "POST /api/cliques/stats",
            "upload": "POST /api/upload/edge-list",
            "runs": "GET /api/runs",
            "graphs": "GET /api/graphs",
            "clear": "DELETE /api/runs/clear",
            "export": "GET /api/export/runs.tsv",
            "docs": "/docs",
            "openapi": "/openapi.json"
        }
    }


@app.exception_handler(404)
async def not_found_handler(request, exc):
    return JSONResponse(
        status_code=404,
        content={"detail": "Endpoint not found"}
    )


if __name__ == "__main__":
    import uvicorn
    config.setup_logging()
    uvicorn.run(app, host="0.0.0.0", port=config.PORT)
