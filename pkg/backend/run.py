"""Entry point for the FastAPI backend server.

This module starts the FastAPI application using Uvicorn. It:
1. Adds the backend and src directories to the Python path for module imports.
2. Reads host and port from the service configuration.
3. Runs the FastAPI app defined in main.py.

Example:
    To start the server:
        $ python run.py
"""

import os
import sys
import uvicorn

# Add the backend directory to Python path
backend_dir = os.path.dirname(os.path.abspath(__file__))
src_dir = os.path.join(backend_dir, 'src')
sys.path.insert(0, src_dir)
sys.path.insert(0, backend_dir)

from config.settings import load_service_config, validate_config

if __name__ == "__main__":
    config = load_service_config()
    if error := validate_config(config):
        sys.exit(error)
    uvicorn.run(
        "main:app",
        host=config['api_host'],
        port=int(config['api_port']),
        reload=True,
        reload_dirs=[backend_dir]
    )
