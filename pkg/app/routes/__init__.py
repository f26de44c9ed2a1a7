# Routes
