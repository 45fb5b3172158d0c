Socket link = new Socket(gatewayHost, gatewayPort);
try {
    link.getInputStream();
    pump(link);
} catch (IOException dropped) {
    Log.warn("connection dropped", dropped);
    retryLater(gatewayHost, gatewayPort);
}
