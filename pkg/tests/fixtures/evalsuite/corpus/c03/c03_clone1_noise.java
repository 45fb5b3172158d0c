URL endpoint = new URL(mirrorA);
try {
    HttpURLConnection link = (HttpURLConnection) endpoint.openConnection();
    link.getResponseCode();
} catch (IOException e) { }
